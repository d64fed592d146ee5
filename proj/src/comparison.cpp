#include "comparison.hpp"

#include "hex_packing.hpp"
#include "parallel_lanes.hpp"
#include "rounding.hpp"
#include "touch_run.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace swarm::compare {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSqrt3 = std::numbers::sqrt3;

}  // namespace

double crossover_u() {
    return (kSqrt3 + 2.0) / (4.0 - 2.0 * kSqrt3);
}

double f_h_min_of_u(double u, double v, double d) {
    return 2.0 / kSqrt3 * (2.0 * u - 1.0) * v / d;
}

double f_h_max_of_u(double u, double v, double d) {
    return 2.0 / kSqrt3 * (2.0 * u + 1.0) * v / d;
}

std::pair<double, double> best_theta(double T, const SwarmParams& p, int n_samples) {
    if (T <= 0) throw std::domain_error("best_theta: T > 0 required");
    if (n_samples < 2) throw std::domain_error("best_theta: n_samples >= 2 required");

    // Candidate pool: the even grid over [0, pi/3) plus pi/6, kept explicit
    // so nested grids literally take a max over a superset.
    std::vector<double> candidates;
    candidates.reserve(n_samples + 1);
    const double step = kPi / 3 / n_samples;
    for (int i = 0; i < n_samples; ++i) candidates.push_back(i * step);
    candidates.push_back(kPi / 6);

    double best_theta_v = 0, best_f = -1;
    for (double theta : candidates) {
        const double f = hex::throughput_at(T, hex::HexConfig(theta), p);
        if (f > best_f || (f == best_f && theta < best_theta_v)) {
            best_f = f;
            best_theta_v = theta;
        }
    }
    return {best_theta_v, best_f};
}

double f_t_of_u(double u, std::optional<double> T, double v, double d) {
    const SwarmParams p(v, d, u * d);
    const auto [k_lo, k_hi] = touchrun::lane_domain(p);
    double best = -1;
    for (int k = k_lo; k <= k_hi; ++k) {
        const double f = T ? touchrun::throughput_at(k, *T, p) : touchrun::asymptotic(k, p);
        if (f > best) best = f;
    }
    return best;
}

std::vector<StrategyCurvePoint> sweep(const SweepSpec& spec) {
    if (spec.points < 1 || spec.u_max < spec.u_min || spec.T <= 0)
        throw std::domain_error("sweep: invalid range");
    std::vector<StrategyCurvePoint> out(spec.points);
    const double du = spec.points > 1 ? (spec.u_max - spec.u_min) / (spec.points - 1) : 0.0;

#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < spec.points; ++i) {
        const double u = spec.points > 1 ? spec.u_min + i * du : spec.u_min;
        StrategyCurvePoint pt;
        pt.u = u;
        if (round13(u - 0.5) >= 0) {
            const SwarmParams p(spec.v, spec.d, u * spec.d);
            pt.f_p = parallel::throughput_at(spec.T, p);
            pt.f_h_min = f_h_min_of_u(u, spec.v, spec.d);
            pt.f_h_max = f_h_max_of_u(u, spec.v, spec.d);
            pt.f_h_at_T = best_theta(spec.T, p, spec.theta_samples).second;
        }
        if (round13(u - 1.0 / kSqrt3) >= 0) {
            pt.f_t_at_T = f_t_of_u(u, spec.T, spec.v, spec.d);
            pt.f_t_asym = f_t_of_u(u, std::nullopt, spec.v, spec.d);
        }
        out[i] = pt;
    }
    return out;
}

}  // namespace swarm::compare
