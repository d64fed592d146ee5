#include "doctest.h"

#include <stdexcept>

#include "point_target.hpp"

#include <cmath>
#include <numbers>

using namespace swarm;
using point::ApproachAngle;

namespace {

constexpr double kPi = std::numbers::pi;

// Inter-robot distance over time for two straight trajectories meeting at
// the origin, robot 2 delayed by tau.
double pair_distance(double theta, double v, double tau, double t) {
    const double x1 = v * t, y1 = 0;
    const double x2 = v * (t - tau) * std::cos(theta);
    const double y2 = v * (t - tau) * std::sin(theta);
    return std::hypot(x1 - x2, y1 - y2);
}

// Dense grid plus golden-section refinement of min_t distance.
double min_pair_distance(double theta, double v, double tau) {
    const double span = 8.0 * (tau + 1.0);
    double best_t = 0, best = pair_distance(theta, v, tau, 0);
    const int grid = 4000;
    for (int i = -grid; i <= grid; ++i) {
        const double t = span * i / grid;
        const double dist = pair_distance(theta, v, tau, t);
        if (dist < best) {
            best = dist;
            best_t = t;
        }
    }
    double a = best_t - span / grid, b = best_t + span / grid;
    const double phi = (std::sqrt(5.0) - 1) / 2;
    double c = b - phi * (b - a), d = a + phi * (b - a);
    for (int it = 0; it < 200; ++it) {
        if (pair_distance(theta, v, tau, c) < pair_distance(theta, v, tau, d)) {
            b = d;
        } else {
            a = c;
        }
        c = b - phi * (b - a);
        d = a + phi * (b - a);
    }
    return pair_distance(theta, v, tau, (a + b) / 2);
}

}  // namespace

TEST_CASE("normalized delay values") {
    CHECK(point::normalized_delay(ApproachAngle(0)) == doctest::Approx(1.0));
    CHECK(point::normalized_delay(ApproachAngle(kPi / 3)) == doctest::Approx(2.0 / std::sqrt(3.0)));
    CHECK(point::normalized_delay(ApproachAngle(kPi / 2)) == doctest::Approx(std::sqrt(2.0)));
    CHECK(point::normalized_delay(ApproachAngle(2 * kPi / 3)) == doctest::Approx(2.0));
}

TEST_CASE("min delay values") {
    const SwarmParams p(1, 1, 0);
    CHECK(point::min_delay(ApproachAngle(0), p) == doctest::Approx(1.0));
    CHECK(point::min_delay(ApproachAngle(kPi / 3), p) == doctest::Approx(1.1547005383792517));
    CHECK(point::min_delay(ApproachAngle(kPi / 2), p) == doctest::Approx(1.4142135623730951));
}

TEST_CASE("head-on approach rejected") {
    CHECK_THROWS_AS((void)ApproachAngle(kPi), std::domain_error);
    CHECK_THROWS_AS((void)ApproachAngle(-0.1), std::domain_error);
}

TEST_CASE("optimal point throughput is v/d") {
    CHECK(point::optimal_point_throughput(SwarmParams(1, 1, 0)) == doctest::Approx(1.0));
    CHECK(point::optimal_point_throughput(SwarmParams(2, 1, 0)) == doctest::Approx(2.0));
    CHECK(point::optimal_point_throughput(SwarmParams(0.1, 0.5, 0)) == doctest::Approx(0.2));
}

TEST_CASE("normalized delay is even-symmetric and increasing on [0, pi)") {
    double prev = 0;
    for (int i = 0; i < 60; ++i) {
        const double theta = i * (kPi / 61);
        const double nd = point::normalized_delay(ApproachAngle(theta));
        CHECK(nd >= 1.0);
        if (i > 0) CHECK(nd > prev);
        prev = nd;
    }
}

TEST_CASE("delay formula keeps the robots d apart (kinematic oracle)") {
    for (double theta : {0.0, 0.3, kPi / 3, kPi / 2, 2.5}) {
        for (double v : {0.5, 1.0, 2.0}) {
            const SwarmParams p(v, 1.0, 0);
            const double tau = point::min_delay(ApproachAngle(theta), p);
            CHECK(min_pair_distance(theta, v, tau) >= p.d - 1e-9);
            // 1% less delay must break the distance constraint
            if (theta > 0.01)
                CHECK(min_pair_distance(theta, v, tau * 0.99) < p.d - 1e-6);
        }
    }
}
