#include "parallel_lanes.hpp"

#include "rounding.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace swarm::parallel {

namespace {

double extra_distance(int j, const SwarmParams& p) {
    const double y = p.s - (j - 1) * p.d;
    // s^2 - y^2 factored as (s-y)(s+y) to keep the radicand non-negative
    // under rounding at the outermost lanes.
    const double radicand = std::max(0.0, (p.s - y) * (p.s + y));
    return p.s - std::sqrt(radicand);
}

}  // namespace

Layout layout(const SwarmParams& p) {
    if (round13(p.s - p.d / 2) < 0)
        throw std::domain_error("parallel lanes: s >= d/2 required");
    const int lanes = static_cast<int>(floor13(2.0 * p.s / p.d)) + 1;
    const double ratio = p.s / p.d;
    const auto lo = floor13(ratio);
    const auto hi = ceil13(ratio);
    // Tie favours the floor branch.
    const bool pick_floor =
        std::fabs(p.s - static_cast<double>(lo) * p.d) <= std::fabs(p.s - static_cast<double>(hi) * p.d);
    int J = static_cast<int>(pick_floor ? lo : hi) + 1;
    J = std::clamp(J, 1, lanes);

    Layout lay{lanes, J, {}};
    lay.d_extra.reserve(lanes);
    for (int j = 1; j <= lanes; ++j) lay.d_extra.push_back(extra_distance(j, p));
    return lay;
}

long long robots_in_lane(int i, double T, const SwarmParams& p) {
    const Layout lay = layout(p);
    if (i < 1 || i > lay.lanes)
        throw std::domain_error("parallel lanes: lane index out of range");
    if (T < 0) return 0;
    const double di = lay.d_extra[i - 1];
    const double dJ = lay.d_extra[lay.first_lane - 1];
    if (round13(T - (di - dJ) / p.v) < 0) return 0;
    return std::max<long long>(0, floor13((p.v * T - di + dJ) / p.d + 1.0));
}

double throughput_at(double T, const SwarmParams& p) {
    if (T <= 0) throw std::domain_error("parallel lanes: T > 0 required");
    const Layout lay = layout(p);
    const double dJ = lay.d_extra[lay.first_lane - 1];
    long long total = 0;
    for (int i = 1; i <= lay.lanes; ++i) {
        const double di = lay.d_extra[i - 1];
        if (round13(T - (di - dJ) / p.v) < 0) continue;
        total += std::max<long long>(0, floor13((p.v * T - di + dJ) / p.d + 1.0));
    }
    return static_cast<double>(total - 1) / T;
}

double asymptotic(const SwarmParams& p) {
    if (round13(p.s - p.d / 2) < 0)
        throw std::domain_error("parallel lanes: s >= d/2 required");
    return static_cast<double>(floor13(2.0 * p.s / p.d + 1.0)) * p.v / p.d;
}

}  // namespace swarm::parallel
