#include "doctest.h"

#include <stdexcept>

#include "parallel_lanes.hpp"
#include "rounding.hpp"

#include <cmath>
#include <random>

using namespace swarm;

namespace {

// Independent oracle: place robots explicitly at (s + k d, s - (i-1) d) and
// count those whose travel distance to the circle boundary fits in vT.
long long brute_force_count(double T, const SwarmParams& p) {
    const int lanes = static_cast<int>(std::floor(round13(2 * p.s / p.d))) + 1;
    // distance the first-arriving robot runs before touching the circle
    double d_first = 1e300;
    for (int i = 1; i <= lanes; ++i) {
        const double y = p.s - (i - 1) * p.d;
        d_first = std::min(d_first, p.s - std::sqrt(std::max(0.0, p.s * p.s - y * y)));
    }
    long long count = 0;
    for (int i = 1; i <= lanes; ++i) {
        const double y = p.s - (i - 1) * p.d;
        const double cross = std::sqrt(std::max(0.0, p.s * p.s - y * y));
        for (int k = 0;; ++k) {
            const double travel = (p.s + k * p.d) - cross - d_first;
            if (round13(p.v * T - travel) < 0) break;
            ++count;
        }
    }
    return count;
}

}  // namespace

TEST_CASE("parallel layout") {
    const auto lay = parallel::layout(SwarmParams(1, 1, 3));
    CHECK(lay.lanes == 7);
    CHECK(lay.first_lane == 4);
    CHECK(lay.d_extra[3] == doctest::Approx(0.0));
    CHECK(lay.d_extra[0] == doctest::Approx(3.0));  // tangent lane runs the full radius
    CHECK(lay.d_extra[1] == doctest::Approx(3.0 - std::sqrt(5.0)));

    // symmetric tie picks the floor branch
    const auto tie = parallel::layout(SwarmParams(1, 1, 0.5));
    CHECK(tie.lanes == 2);
    CHECK(tie.first_lane == 1);

    CHECK_THROWS_AS(parallel::layout(SwarmParams(1, 1, 0.49)), std::domain_error);
}

TEST_CASE("robots per lane") {
    const SwarmParams p(1, 1, 3);
    const auto lay = parallel::layout(p);
    CHECK(parallel::robots_in_lane(lay.first_lane, 0.0, p) == 1);
    CHECK(parallel::robots_in_lane(lay.first_lane, 1.0, p) == 2);
    CHECK(parallel::robots_in_lane(1, 0.5, p) == 0);  // 0.5 < d_1 ~ 0.764
    CHECK_THROWS_AS(parallel::robots_in_lane(0, 1.0, p), std::domain_error);
    CHECK_THROWS_AS(parallel::robots_in_lane(8, 1.0, p), std::domain_error);
}

TEST_CASE("parallel asymptotic") {
    CHECK(parallel::asymptotic(SwarmParams(1, 1, 3)) == doctest::Approx(7.0));
    CHECK(parallel::asymptotic(SwarmParams(1, 1, 6)) == doctest::Approx(13.0));
    CHECK(parallel::asymptotic(SwarmParams(1, 1, 0.5)) == doctest::Approx(2.0));
}

TEST_CASE("throughput matches the explicit-placement oracle") {
    std::mt19937_64 rng(77);
    std::uniform_real_distribution<double> s_dist(0.5, 8.0);
    std::uniform_real_distribution<double> d_dist(0.2, 1.5);
    std::uniform_real_distribution<double> v_dist(0.2, 2.0);
    std::uniform_real_distribution<double> t_dist(0.01, 40.0);
    int checked = 0;
    for (int trial = 0; trial < 400 && checked < 200; ++trial) {
        const double d = d_dist(rng);
        const double s = s_dist(rng);
        if (s < d / 2) continue;
        const SwarmParams p(v_dist(rng), d, s);
        const double T = t_dist(rng);
        long long total = 0;
        const auto lay = parallel::layout(p);
        for (int i = 1; i <= lay.lanes; ++i) total += parallel::robots_in_lane(i, T, p);
        CHECK(total == brute_force_count(T, p));
        CHECK(parallel::throughput_at(T, p) ==
              doctest::Approx(static_cast<double>(total - 1) / T));
        ++checked;
    }
    CHECK(checked == 200);
}

TEST_CASE("parallel f(T) converges to the asymptote") {
    for (double s : {0.5, 1.7, 3.0, 6.0}) {
        const SwarmParams p(1, 1, s);
        const double T = 1000.0 * p.d / p.v;
        CHECK(parallel::throughput_at(T, p) ==
              doctest::Approx(parallel::asymptotic(p)).epsilon(0.01));
    }
    // before the second arrival the throughput is zero
    CHECK(parallel::throughput_at(1e-6, SwarmParams(1, 1, 3)) == doctest::Approx(0.0));
}
