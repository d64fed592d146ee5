#include "point_target.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace swarm::point {

ApproachAngle::ApproachAngle(double theta_) : theta(theta_) {
    if (!(theta >= 0.0) || theta >= std::numbers::pi)
        throw std::domain_error("ApproachAngle: theta in [0, pi) required (robots face each other exactly at pi)");
}

double normalized_delay(ApproachAngle a) {
    const double c = std::cos(a.theta);
    return std::sqrt(2.0 / (1.0 + c));
}

double min_delay(ApproachAngle a, const SwarmParams& p) {
    return p.d / p.v * normalized_delay(a);
}

double optimal_point_throughput(const SwarmParams& p) {
    return p.v / p.d;
}

}  // namespace swarm::point
