#include "core_model.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace swarm {

SwarmParams::SwarmParams(double v_, double d_, double s_) : v(v_), d(d_), s(s_) {
    if (!std::isfinite(v) || !std::isfinite(d) || !std::isfinite(s))
        throw std::domain_error("SwarmParams: v, d, s must be finite");
    if (v <= 0) throw std::domain_error("SwarmParams: v > 0 required");
    if (d <= 0) throw std::domain_error("SwarmParams: d > 0 required");
    if (s < 0) throw std::domain_error("SwarmParams: s >= 0 required");
}

RatioU::RatioU(double u_) : u(u_) {
    if (!std::isfinite(u) || u < 0) throw std::domain_error("RatioU: u >= 0 required");
}

std::string ThroughputSeries::to_csv() const {
    std::ostringstream out;
    out << "t,n,f\n";
    out.precision(15);
    for (const auto& s : samples) {
        out << s.t << ',' << s.n << ',';
        if (s.f) out << *s.f;
        out << '\n';
    }
    return out.str();
}

ThroughputSeries throughput_from_arrivals(std::span<const double> arrival_times) {
    if (arrival_times.empty())
        throw std::domain_error("throughput_from_arrivals: empty arrival list");
    for (size_t i = 1; i < arrival_times.size(); ++i)
        if (arrival_times[i] < arrival_times[i - 1])
            throw std::domain_error("throughput_from_arrivals: arrival times not sorted");

    const double t0 = arrival_times.front();
    ThroughputSeries series;
    series.samples.reserve(arrival_times.size());
    series.samples.push_back({0.0, 1, std::nullopt});
    for (size_t i = 1; i < arrival_times.size(); ++i) {
        const double t = arrival_times[i] - t0;
        const long long n = static_cast<long long>(i) + 1;
        std::optional<double> f;
        if (t > 0) f = static_cast<double>(n - 1) / t;
        series.samples.push_back({t, n, f});
    }
    return series;
}

double mean_interarrival_throughput(std::span<const double> arrival_times) {
    if (arrival_times.size() < 2)
        throw std::domain_error("mean_interarrival_throughput: need >= 2 arrivals");
    for (size_t i = 1; i < arrival_times.size(); ++i)
        if (arrival_times[i] < arrival_times[i - 1])
            throw std::domain_error("mean_interarrival_throughput: arrival times not sorted");
    const double total = arrival_times.back() - arrival_times.front();
    if (total <= 0)
        throw std::domain_error("mean_interarrival_throughput: zero time span");
    const double mean_gap = total / static_cast<double>(arrival_times.size() - 1);
    return 1.0 / mean_gap;
}

}  // namespace swarm
