#include "touch_run.hpp"

#include "rounding.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace swarm::touchrun {

namespace {

constexpr double kPi = std::numbers::pi;

}  // namespace

std::pair<int, int> lane_domain(const SwarmParams& p) {
    if (round13(p.s / p.d - 1.0 / std::numbers::sqrt3) < 0)
        throw std::domain_error("touch and run: u >= 1/sqrt(3) required");
    const int k_max = static_cast<int>(floor13(kPi / std::asin(p.d / (2.0 * p.s))));
    if (k_max < 3) throw std::domain_error("touch and run: empty lane domain");
    return {3, k_max};
}

Config build_config(int k, const SwarmParams& p) {
    const auto [k_lo, k_hi] = lane_domain(p);
    if (k < k_lo || k > k_hi)
        throw std::domain_error("touch and run: K outside the valid lane domain");

    Config c;
    c.k = k;
    c.alpha = 2.0 * kPi / k;
    const double sa = std::sin(c.alpha / 2);
    const double num = p.s * sa - p.d / 2;
    // num >= 0 inside the domain; r = 0 at the boundary integer case is the
    // degenerate sharp turn and still yields a valid spacing.
    if (round13(num) < 0)
        throw std::domain_error("touch and run: K requires s sin(alpha/2) > d/2");
    c.r = std::max(num, 0.0) / (1.0 - sa);
    c.d_r = std::sqrt(std::max(0.0, p.s * (2.0 * c.r + p.s) - c.r * p.d));

    double d_prime;
    if (2.0 * c.r * std::cos(c.alpha / 2) < p.d) {
        d_prime = c.r * (kPi - c.alpha) + (p.d - 2.0 * c.r * std::cos(c.alpha / 2)) / sa;
    } else {
        d_prime = 2.0 * c.r * std::asin(p.d / (2.0 * c.r));
    }
    c.d_o = std::max(p.d, d_prime);
    c.omega = c.r > 0 ? p.v / c.r : std::numeric_limits<double>::infinity();
    return c;
}

double throughput_at(int k, double T, const SwarmParams& p) {
    if (T <= 0) throw std::domain_error("touch and run: T > 0 required");
    const Config c = build_config(k, p);
    return (static_cast<double>(k) * static_cast<double>(floor13(p.v * T / c.d_o + 1.0)) - 1.0) / T;
}

double asymptotic(int k, const SwarmParams& p) {
    const Config c = build_config(k, p);
    return static_cast<double>(k) * p.v / c.d_o;
}

bool feasible(int k, const SwarmParams& p, std::optional<double> omega_max) {
    const Config c = build_config(k, p);
    if (!omega_max) return true;
    return round13(c.omega - *omega_max) <= 0;
}

std::pair<int, double> best_k(const SwarmParams& p, std::optional<double> omega_max) {
    const auto [k_lo, k_hi] = lane_domain(p);
    int best = 0;
    double best_f = -1.0;
    for (int k = k_lo; k <= k_hi; ++k) {
        if (!feasible(k, p, omega_max)) continue;
        const double f = asymptotic(k, p);
        if (f > best_f) {
            best_f = f;
            best = k;
        }
    }
    if (best == 0) throw std::domain_error("touch and run: no feasible K under the turning-rate cap");
    return {best, best_f};
}

}  // namespace swarm::touchrun
