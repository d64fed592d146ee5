#include "compact_lanes.hpp"

#include "rounding.hpp"

#include <cmath>
#include <stdexcept>

namespace swarm::compact {

namespace {

void check_radius(const SwarmParams& p) {
    if (p.s <= 0)
        throw std::domain_error("compact lanes: s > 0 required (use the point-target result for s = 0)");
    if (p.s >= p.d / 2)
        throw std::domain_error("compact lanes: s < d/2 required (use parallel lanes for s >= d/2)");
}

}  // namespace

Layout layout(const SwarmParams& p) {
    check_radius(p);
    // Boundary s = sqrt(3)d/4 belongs to the narrow regime; both formulas
    // coincide there.
    if (round13(p.s - std::sqrt(3.0) / 4.0 * p.d) <= 0) {
        const double d_p = std::sqrt(p.d * p.d - 4.0 * p.s * p.s);
        return {d_p, 2.0 * d_p, Regime::narrow};
    }
    return {p.d / 2.0, p.d, Regime::wide};
}

double throughput_at(double T, const SwarmParams& p) {
    if (T <= 0) throw std::domain_error("compact lanes: T > 0 required");
    const Layout lay = layout(p);
    const double x = p.v * T / lay.d_e;
    const auto n1 = floor13(x);
    const auto n2 = floor13(x + 0.5);
    return static_cast<double>(n1 + n2) / T;
}

double asymptotic(const SwarmParams& p) {
    const Layout lay = layout(p);
    return 2.0 * p.v / lay.d_e;
}

}  // namespace swarm::compact
