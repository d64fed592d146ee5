#pragma once

#include "core_model.hpp"

#include <optional>
#include <vector>

namespace swarm::compare {

// One u = s/d sample of the strategy comparison. Fields are absent where the
// strategy is undefined: parallel lanes need u >= 1/2, touch and run needs
// u >= 1/sqrt(3), the hex corridor needs u >= 1/2.
struct StrategyCurvePoint {
    double u;
    std::optional<double> f_p;        // parallel lanes at time T
    std::optional<double> f_h_min;    // lower asymptotic hex bound (theta = pi/6)
    std::optional<double> f_h_max;    // upper asymptotic hex bound
    std::optional<double> f_h_at_T;   // hex at time T with searched theta*
    std::optional<double> f_t_at_T;   // touch and run at time T, best K
    std::optional<double> f_t_asym;   // touch and run asymptotic, best K
};

// u ratio past which floor(2u+1) v/d never exceeds the hex lower bound:
// (sqrt(3)+2)/(4-2sqrt(3)).
double crossover_u();

double f_h_min_of_u(double u, double v, double d);
double f_h_max_of_u(double u, double v, double d);

// Searches theta over n_samples evenly spaced points of [0, pi/3) plus
// pi/6; ties go to the smaller theta. Returns (theta*, f_h(T, theta*)).
std::pair<double, double> best_theta(double T, const SwarmParams& p, int n_samples);

// Touch-and-run throughput as a function of u: max over K of the asymptotic
// K/max(1, d'(u,K)) v/d, or of the fixed-T value when T is given.
double f_t_of_u(double u, std::optional<double> T, double v, double d);

struct SweepSpec {
    double u_min, u_max;
    int points;
    double T;
    double v, d;
    int theta_samples;
};

// One StrategyCurvePoint per u, endpoints inclusive, evaluated concurrently
// with deterministic ordered output.
std::vector<StrategyCurvePoint> sweep(const SweepSpec& spec);

}  // namespace swarm::compare
