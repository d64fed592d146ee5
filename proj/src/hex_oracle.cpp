#include "hex_oracle.hpp"

#include "rounding.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace swarm::oracle {

namespace {

hex::HexFrame raw_frame(double theta, double d, double x0, double y0) {
    const double c = std::cos(theta), s = std::sin(theta);
    hex::HexFrame f;
    f.rotation = theta;
    f.origin_x = x0;
    f.origin_y = y0;
    f.forward = {{{d * c, d * (-c / 2 - std::numbers::sqrt3 / 2 * s)},
                  {d * s, d * (-s / 2 + std::numbers::sqrt3 / 2 * c)}}};
    const double det = f.forward[0][0] * f.forward[1][1] - f.forward[0][1] * f.forward[1][0];
    f.inverse = {{{f.forward[1][1] / det, -f.forward[0][1] / det},
                  {-f.forward[1][0] / det, f.forward[0][0] / det}}};
    return f;
}

std::vector<LatticePoint> enumerate_impl(double T, double theta, const SwarmParams& p,
                                         double x0, double y0) {
    if (T <= 0) throw std::domain_error("hex oracle: T > 0 required");
    const hex::HexFrame frame = raw_frame(theta, p.d, x0, y0);
    const double cx = x0 + p.v * T - p.s;
    const bool has_rect = round13(p.v * T - p.s) > 0;

    const double pad = 2.0 * p.d;
    const double xmin = x0 - pad, xmax = std::max(cx, x0) + p.s + pad;
    const double ymin = y0 - p.s - pad, ymax = y0 + p.s + pad;

    // Hex-coordinate ranges from the box corners; membership, not
    // generation, decides inclusion.
    double amin = 0, amax = 0, bmin = 0, bmax = 0;
    bool first = true;
    for (double bx : {xmin, xmax})
        for (double by : {ymin, ymax}) {
            const auto [a, b] = frame.to_hex(bx, by);
            if (first) { amin = amax = a; bmin = bmax = b; first = false; }
            amin = std::min(amin, a); amax = std::max(amax, a);
            bmin = std::min(bmin, b); bmax = std::max(bmax, b);
        }
    const long long a0 = static_cast<long long>(std::floor(amin)) - 3;
    const long long a1 = static_cast<long long>(std::ceil(amax)) + 3;
    const long long b0 = static_cast<long long>(std::floor(bmin)) - 3;
    const long long b1 = static_cast<long long>(std::ceil(bmax)) + 3;

    std::vector<LatticePoint> out;
    for (long long a = a0; a <= a1; ++a) {
        for (long long b = b0; b <= b1; ++b) {
            const auto [x, y] = frame.to_plane(a, b);
            const double dy = std::fabs(y - y0);
            const double circ = round13((x - cx) * (x - cx) + (y - y0) * (y - y0) - p.s * p.s);
            bool inside = false;
            if (has_rect) {
                const bool in_rect = round13(x - x0) >= 0 && round13(x - cx) <= 0 &&
                                     round13(dy - p.s) <= 0;
                const bool in_cap = round13(x - cx) >= 0 && circ <= 0;
                inside = in_rect || in_cap;
            } else {
                inside = round13(x - x0) >= 0 && circ <= 0;
            }
            if (inside) out.push_back({a, b, x, y});
        }
    }
    return out;
}

}  // namespace

std::vector<LatticePoint> enumerate_region(double T, const hex::HexConfig& cfg,
                                           const SwarmParams& p) {
    return enumerate_impl(T, cfg.theta, p, hex::anchor_x(p), hex::anchor_y(p));
}

long long count(double T, const hex::HexConfig& cfg, const SwarmParams& p) {
    return static_cast<long long>(enumerate_region(T, cfg, p).size());
}

std::vector<LatticePoint> enumerate_region_at(double T, double theta, const SwarmParams& p,
                                              double x0, double y0) {
    return enumerate_impl(T, theta, p, x0, y0);
}

}  // namespace swarm::oracle
