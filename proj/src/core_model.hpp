#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace swarm {

// The parameter triple every throughput formula consumes: robot speed v,
// minimum inter-robot distance d and target-region radius s.
struct SwarmParams {
    double v;  // linear speed, m/s
    double d;  // minimum inter-robot distance, m
    double s;  // target-region radius, m

    SwarmParams(double v, double d, double s);

    double u() const { return s / d; }
};

// Dimensionless ratio s/d the strategy comparison is parameterised by.
struct RatioU {
    double u;

    explicit RatioU(const SwarmParams& p) : u(p.s / p.d) {}
    explicit RatioU(double u);
};

struct ThroughputSample {
    double t;                // seconds since first arrival
    long long n;             // cumulative robots arrived
    std::optional<double> f; // (n-1)/t; absent on the t = 0 row
};

// Arrival log expressed as throughput-per-time samples. The first robot is
// not counted, so the t = 0 entry carries n = 1 and no f value.
struct ThroughputSeries {
    std::vector<ThroughputSample> samples;

    // CSV with header `t,n,f`; f blank on the first row.
    std::string to_csv() const;
};

ThroughputSeries throughput_from_arrivals(std::span<const double> arrival_times);

// Inverse of the mean consecutive gap; coincides with the final f of
// throughput_from_arrivals for every valid list.
double mean_interarrival_throughput(std::span<const double> arrival_times);

}  // namespace swarm
