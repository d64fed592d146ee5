#pragma once

#include "core_model.hpp"

#include <optional>
#include <utility>

namespace swarm::touchrun {

// One lane layout of the touch-and-run strategy: K curved lanes tangent to
// the target, each occupying central angle alpha = 2pi/K.
struct Config {
    int k;
    double alpha;  // central angle per lane
    double r;      // turning radius making the arc tangent to the target
    double d_o;    // in-lane spacing preserving distance d through the arc
    double d_r;    // distance from target centre where turning starts/stops
    double omega;  // turning rate v/r
};

// Valid lane counts {3, ..., K_max}; requires u = s/d >= 1/sqrt(3).
std::pair<int, int> lane_domain(const SwarmParams& p);

Config build_config(int k, const SwarmParams& p);

// (1/T)(K floor(vT/d_o + 1) - 1).
double throughput_at(int k, double T, const SwarmParams& p);

// K v / d_o.
double asymptotic(int k, const SwarmParams& p);

// Whether lane count k respects an optional turning-rate cap.
bool feasible(int k, const SwarmParams& p, std::optional<double> omega_max);

// Highest-throughput lane count by linear search over the (filtered) domain;
// ties go to the smaller K.
std::pair<int, double> best_k(const SwarmParams& p,
                              std::optional<double> omega_max = std::nullopt);

}  // namespace swarm::touchrun
