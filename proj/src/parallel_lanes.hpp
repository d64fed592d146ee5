#pragma once

#include "core_model.hpp"

#include <vector>

namespace swarm::parallel {

// floor(2s/d)+1 straight lanes spaced d apart crossing the target, lane i
// starting at (s, s-(i-1)d). d_extra[i-1] is the extra distance d_i the
// first robot of lane i runs before touching the circle boundary.
struct Layout {
    int lanes;
    int first_lane;               // 1-based J, the lane that arrives first
    std::vector<double> d_extra;  // d_j, one per lane
};

// Requires s >= d/2.
Layout layout(const SwarmParams& p);

// Robots of lane i (1-based) that arrived by time T after the first arrival.
long long robots_in_lane(int i, double T, const SwarmParams& p);

double throughput_at(double T, const SwarmParams& p);

// floor(2s/d + 1) * v/d.
double asymptotic(const SwarmParams& p);

}  // namespace swarm::parallel
