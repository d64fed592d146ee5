#pragma once

#include "core_model.hpp"

namespace swarm::compact {

// Two lanes spaced 2s apart with a longitudinal offset so pairwise distance
// stays >= d. NARROW keeps the offset from the Pythagorean relation; WIDE
// (s past sqrt(3)d/4) settles into the equilateral-triangle formation.
enum class Regime { narrow, wide };

struct Layout {
    double d_p;  // inter-lane longitudinal offset
    double d_e;  // same-lane spacing, 2*d_p in the narrow regime
    Regime regime;
};

// Requires 0 < s < d/2; outside that range the point-target or parallel-lanes
// strategy applies instead.
Layout layout(const SwarmParams& p);

double throughput_at(double T, const SwarmParams& p);

double asymptotic(const SwarmParams& p);

}  // namespace swarm::compact
