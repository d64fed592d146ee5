#pragma once

#include "core_model.hpp"

namespace swarm::point {

// Angle between two robots' straight-line trajectories, in [0, pi).
// theta = pi (exact head-on approach) is rejected.
struct ApproachAngle {
    double theta;

    explicit ApproachAngle(double theta);
};

// Minimum delay between two arrivals keeping the robots >= d apart:
// (d/v) * sqrt(2 / (1 + cos theta)).
double min_delay(ApproachAngle theta, const SwarmParams& p);

// min_delay / (d/v); >= 1 with equality iff theta = 0.
double normalized_delay(ApproachAngle theta);

// Optimal point-target throughput v/d (single line of robots).
double optimal_point_throughput(const SwarmParams& p);

}  // namespace swarm::point
