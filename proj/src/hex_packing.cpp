#include "hex_packing.hpp"

#include "rounding.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace swarm::hex {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSqrt3 = std::numbers::sqrt3;
// Threshold for the theta = pi/6 closed forms; the general branches divide
// by sin(psi - pi/6) and are used outside this band.
constexpr double kPi6Band = 1e-9;

bool rect_exists(double T, const SwarmParams& p) {
    return round13(p.v * T - p.s) > 0;
}

void check_hex_params(const SwarmParams& p) {
    if (round13(2.0 * p.s - p.d) < 0)
        throw std::domain_error("hex packing: d <= 2s required");
}

// Per-evaluation trigonometric context for the rectangle counting (in psi).
struct RectCtx {
    double sp, cp;    // sin(psi), cos(psi)
    double a1;        // cos(pi/6 - psi)
    double a2;        // sin(psi - pi/6)
    double w;         // (vT - s)/d
    double sd;        // s/d
    bool at_pi6;
    bool psi_gt_pi6;

    RectCtx(double T, const HexConfig& cfg, const SwarmParams& p) {
        sp = std::sin(cfg.psi);
        cp = std::cos(cfg.psi);
        a1 = std::cos(kPi / 6 - cfg.psi);
        a2 = std::sin(cfg.psi - kPi / 6);
        w = (p.v * T - p.s) / p.d;
        sd = p.s / p.d;
        at_pi6 = std::fabs(cfg.psi - kPi / 6) < kPi6Band;
        psi_gt_pi6 = cfg.psi > kPi / 6;
    }

    std::pair<double, double> column_range(long long xh) const {
        const double x = static_cast<double>(xh);
        if (at_pi6) return {x / 2 - sd, x / 2 + sd};
        const double bottom = (sp * x - sd) / a1;
        const double top = (sp * x + sd) / a1;
        const double left = -cp * x / a2;
        const double right = (w - cp * x) / a2;
        if (psi_gt_pi6) return {std::max(bottom, left), std::min(top, right)};
        return {std::max(bottom, right), std::min(top, left)};
    }
};

}  // namespace

HexConfig::HexConfig(double theta_) : theta(theta_), psi(kPi / 3 - theta_) {
    if (!(theta >= 0.0) || !(theta < kPi / 3))
        throw std::domain_error("hex packing: theta in [0, pi/3) required");
}

std::pair<double, double> HexFrame::to_plane(long long xh, long long yh) const {
    const double a = static_cast<double>(xh), b = static_cast<double>(yh);
    return {origin_x + forward[0][0] * a + forward[0][1] * b,
            origin_y + forward[1][0] * a + forward[1][1] * b};
}

std::pair<double, double> HexFrame::to_hex(double x, double y) const {
    const double gx = x - origin_x, gy = y - origin_y;
    return {inverse[0][0] * gx + inverse[0][1] * gy,
            inverse[1][0] * gx + inverse[1][1] * gy};
}

HexFrame lattice_frame(const HexConfig& cfg, double d, double x0, double y0) {
    const double c = std::cos(cfg.theta), s = std::sin(cfg.theta);
    HexFrame f;
    f.rotation = cfg.theta;
    f.origin_x = x0;
    f.origin_y = y0;
    // Rot(theta) * [[d, -d/2], [0, sqrt(3)d/2]], expanded so the special
    // angles keep exact column entries.
    f.forward = {{{d * c, d * (-c / 2 - kSqrt3 / 2 * s)},
                  {d * s, d * (-s / 2 + kSqrt3 / 2 * c)}}};
    const double det = f.forward[0][0] * f.forward[1][1] - f.forward[0][1] * f.forward[1][0];
    f.inverse = {{{f.forward[1][1] / det, -f.forward[0][1] / det},
                  {-f.forward[1][0] / det, f.forward[0][0] / det}}};
    return f;
}

double upper_bound_asymptotic(const SwarmParams& p) {
    check_hex_params(p);
    return 2.0 / kSqrt3 * (2.0 * p.s / p.d + 1.0) * p.v / p.d;
}

std::pair<long long, long long> lane_line_counts(double T, const HexConfig& cfg,
                                                 const SwarmParams& p) {
    if (!rect_exists(T, p))
        throw std::domain_error("hex packing: lane lines need vT > s");
    const double dev = std::fabs(cfg.psi - kPi / 6);
    const long long nlp =
        floor13((2.0 * (p.v * T - p.s) * std::cos(cfg.psi - kPi / 6) + 2.0 * p.s * std::sin(dev)) /
                    (kSqrt3 * p.d) +
                1.0);
    const long long nlm = floor13(2.0 * p.s * std::sin(dev) / (kSqrt3 * p.d));
    return {nlm, nlp};
}

std::pair<double, double> rect_column_range(long long xh, double T, const HexConfig& cfg,
                                            const SwarmParams& p) {
    return RectCtx(T, cfg, p).column_range(xh);
}

long long count_rectangle(double T, const HexConfig& cfg, const SwarmParams& p) {
    if (T <= 0) throw std::domain_error("hex packing: T > 0 required");
    if (!rect_exists(T, p)) return 0;
    const auto [nlm, nlp] = lane_line_counts(T, cfg, p);
    const RectCtx ctx(T, cfg, p);
    long long total = 0;
    for (long long xh = -nlm; xh <= nlp - 1; ++xh) {
        const auto [y1, y2] = ctx.column_range(xh);
        total += std::max<long long>(0, floor13(y2) - ceil13(y1) + 1);
    }
    return total;
}

std::pair<double, double> last_robot_in_rectangle(double T, const HexConfig& cfg,
                                                  const SwarmParams& p) {
    const double x0 = anchor_x(p), y0 = anchor_y(p);
    if (!rect_exists(T, p)) return {x0, y0};

    const auto [nlm, nlp] = lane_line_counts(T, cfg, p);
    const RectCtx ctx(T, cfg, p);
    const double cx = x0 + p.v * T - p.s;
    // Plane coordinates of a rectangle-frame lattice point:
    //   x = x0 + d (cos(psi) xh + sin(psi - pi/6) yh)
    //   y = y0 + d (-sin(psi) xh + cos(pi/6 - psi) yh)
    const auto plane = [&](long long xh, double yh) {
        return std::pair<double, double>{
            x0 + p.d * (ctx.cp * static_cast<double>(xh) + ctx.a2 * yh),
            y0 + p.d * (-ctx.sp * static_cast<double>(xh) + ctx.a1 * yh)};
    };

    // The argmin sits within L1 distance ~2.5d of (c_x, y0), so only robots
    // with x >= c_x - cutoff need scanning when the rectangle is wide.
    const double cutoff = 4.0 * p.d;
    const bool thin = p.v * T - p.s < 2.0 * p.d;

    bool found = false;
    double best_l1 = 0, best_x = 0, best_y = 0;
    auto consider = [&](double x, double y) {
        const double l1 = std::fabs(cx - x) + std::fabs(y0 - y);
        if (!found) {
            found = true;
            best_l1 = l1; best_x = x; best_y = y;
            return;
        }
        const double dl = round13(l1 - best_l1);
        bool better = dl < 0;
        if (dl == 0) {
            const double dx = round13(x - best_x);
            if (dx > 0) better = true;
            else if (dx == 0) {
                const double dy = round13(std::fabs(y - y0) - std::fabs(best_y - y0));
                better = dy < 0 || (dy == 0 && y > best_y);
            }
        }
        if (better) { best_l1 = l1; best_x = x; best_y = y; }
    };

    for (long long xh = nlp - 1; xh >= -nlm; --xh) {
        const auto [ry1, ry2] = ctx.column_range(xh);
        long long lo = ceil13(ry1), hi = floor13(ry2);
        if (lo > hi) continue;
        if (!thin) {
            // restrict to yh with plane-x >= c_x - cutoff
            const double need = (p.v * T - p.s - cutoff) / p.d - ctx.cp * static_cast<double>(xh);
            if (std::fabs(ctx.a2) < 1e-14) {
                if (need > 0) continue;
            } else if (ctx.a2 > 0) {
                lo = std::max(lo, ceil13(need / ctx.a2));
            } else {
                hi = std::min(hi, floor13(need / ctx.a2));
            }
            if (lo > hi) continue;
        }
        for (long long yh = lo; yh <= hi; ++yh) {
            const auto [x, y] = plane(xh, static_cast<double>(yh));
            consider(x, y);
        }
    }
    if (!found) return {x0, y0};  // empty rectangle at extreme widths
    return {best_x, best_y};
}

namespace {

// Per-evaluation context for the semicircle counting (in theta).
struct SemiCtx {
    double cx, crx, cry;  // centre x and its rotated image
    bool past_rect;       // T > s/v
    double st, ct;        // sin(theta), cos(theta)
    double s13, c13;      // sin(pi/3 - theta), cos(pi/3 - theta)
    double denom;         // sin(5pi/6 - theta)
    double arc_r = 0;     // chord radius sqrt(2svT - (vT)^2) when vT <= s

    SemiCtx(double T, const HexConfig& cfg, const SwarmParams& p,
            std::pair<double, double> last) {
        const double x0 = anchor_x(p), y0 = anchor_y(p);
        cx = x0 + p.v * T - p.s;
        past_rect = rect_exists(T, p);
        st = std::sin(cfg.theta);
        ct = std::cos(cfg.theta);
        s13 = std::sin(kPi / 3 - cfg.theta);
        c13 = std::cos(kPi / 3 - cfg.theta);
        denom = std::sin(5.0 * kPi / 6 - cfg.theta);
        const double rx = cx - last.first, ry = y0 - last.second;
        crx = ct * rx + st * ry;
        cry = -st * rx + ct * ry;
        if (!past_rect) arc_r = std::sqrt(std::max(0.0, 2.0 * p.s * p.v * T - p.v * T * p.v * T));
    }
};

}  // namespace

std::pair<long long, long long> semicircle_bounds(double T, const HexConfig& cfg,
                                                  const SwarmParams& p,
                                                  std::pair<double, double> last) {
    if (T <= 0) throw std::domain_error("hex packing: T > 0 required");
    const double x0 = anchor_x(p), y0 = anchor_y(p);
    const SemiCtx c(T, cfg, p, last);
    const double rx = c.cx - last.first, ry = y0 - last.second;

    long long B;
    if (c.past_rect) {
        B = ceil13(2.0 * (c.s13 * rx + c.c13 * (ry - p.s)) / (kSqrt3 * p.d));
    } else {
        B = ceil13(-2.0 * c.arc_r * std::sin(cfg.theta + kPi / 6) / (kSqrt3 * p.d));
    }

    long long U;
    // The tangent column may fall behind the first robot's perpendicular for
    // small T; atan2 keeps the quadrant right when vT - s makes the x-part
    // negative.
    bool tangent_side = c.past_rect;
    if (!tangent_side) {
        const double ang = std::atan2(p.s / 2 - c.st * (p.v * T - p.s),
                                      kSqrt3 * p.s / 2 + c.ct * (p.v * T - p.s));
        tangent_side = round13(ang - (kPi / 2 - cfg.theta)) <= 0;
    }
    if (tangent_side) {
        U = floor13(2.0 * (c.s13 * rx + c.c13 * ry + p.s) / (kSqrt3 * p.d));
    } else {
        U = floor13(2.0 * c.arc_r * std::cos(cfg.theta - kPi / 3) / (kSqrt3 * p.d));
    }
    return {B, U};
}

std::optional<std::pair<double, double>> semicircle_column_range(
    long long xh, double T, const HexConfig& cfg, const SwarmParams& p,
    std::pair<double, double> last) {
    const SemiCtx c(T, cfg, p, last);
    const double x = static_cast<double>(xh);
    const double delta =
        4.0 * p.s * p.s - std::pow(kSqrt3 * (p.d * x - c.crx) - c.cry, 2);
    if (round13(delta) < 0) return std::nullopt;  // column misses the circle
    const double root = std::sqrt(std::max(0.0, delta));
    const double c1 = (p.d * x - c.crx + kSqrt3 * c.cry - root) / (2.0 * p.d);
    const double c2 = (p.d * x - c.crx + kSqrt3 * c.cry + root) / (2.0 * p.d);
    const double line = c.past_rect
                            ? (std::sin(kPi / 2 - cfg.theta) * (p.d * x - c.crx) +
                               std::cos(kPi / 2 - cfg.theta) * c.cry) /
                                  (p.d * c.denom)
                            : std::sin(kPi / 2 - cfg.theta) * x / c.denom;
    double y2 = std::min(line, c2);
    // A robot exactly on the rectangle's right edge was already counted
    // there. The guard uses the shared rounding policy, so it fires for
    // on-edge robots only and spares robots genuinely beyond the edge.
    if (c.past_rect && round13(y2) == static_cast<double>(floor13(line))) y2 -= 1.0;
    return std::pair<double, double>{c1, y2};
}

long long count_semicircle(double T, const HexConfig& cfg, const SwarmParams& p) {
    if (T <= 0) throw std::domain_error("hex packing: T > 0 required");
    const auto last = last_robot_in_rectangle(T, cfg, p);
    const auto [B, U] = semicircle_bounds(T, cfg, p, last);
    long long total = 0;
    for (long long xh = B; xh <= U; ++xh) {
        const auto range = semicircle_column_range(xh, T, cfg, p, last);
        if (!range) continue;
        total += std::max<long long>(0, floor13(range->second) - ceil13(range->first) + 1);
    }
    return total;
}

long long count_total(double T, const HexConfig& cfg, const SwarmParams& p) {
    check_hex_params(p);
    return count_rectangle(T, cfg, p) + count_semicircle(T, cfg, p);
}

double throughput_at(double T, const HexConfig& cfg, const SwarmParams& p) {
    if (T <= 0) throw std::domain_error("hex packing: T > 0 required");
    check_hex_params(p);
    return static_cast<double>(count_total(T, cfg, p) - 1) / T;
}

std::pair<double, double> asymptotic_bounds(const HexConfig& cfg, const SwarmParams& p) {
    check_hex_params(p);
    const double centre = 4.0 * p.v * p.s / (kSqrt3 * p.d * p.d);
    const double half = 2.0 * p.v * std::cos(cfg.theta - kPi / 6) / (kSqrt3 * p.d);
    return {centre - half, centre + half};
}

HexCountBreakdown count_breakdown(double T, const HexConfig& cfg, const SwarmParams& p) {
    if (T <= 0) throw std::domain_error("hex packing: T > 0 required");
    check_hex_params(p);
    HexCountBreakdown b;
    if (rect_exists(T, p)) {
        const auto [nlm, nlp] = lane_line_counts(T, cfg, p);
        b.n_l_minus = nlm;
        b.n_l_plus = nlp;
        const double dev = std::fabs(cfg.psi - kPi / 6);
        b.k_prime = ceil13((2.0 * (p.v * T - p.s) * std::cos(cfg.psi - kPi / 6) -
                            2.0 * p.s * std::sin(dev)) /
                           (kSqrt3 * p.d));
        b.rect_count = count_rectangle(T, cfg, p);
    }
    const auto last = last_robot_in_rectangle(T, cfg, p);
    b.last_x = last.first;
    b.last_y = last.second;
    b.c_x = anchor_x(p) + p.v * T - p.s;
    const SemiCtx c(T, cfg, p, last);
    b.c_rot_x = c.crx;
    b.c_rot_y = c.cry;
    const auto [B, U] = semicircle_bounds(T, cfg, p, last);
    b.col_lo = B;
    b.col_hi = U;
    b.semi_count = count_semicircle(T, cfg, p);
    return b;
}

}  // namespace swarm::hex
