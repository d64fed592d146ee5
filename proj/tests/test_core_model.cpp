#include "doctest.h"

#include <stdexcept>

#include "core_model.hpp"

#include <random>
#include <vector>

using namespace swarm;

TEST_CASE("throughput series from arrivals") {
    SUBCASE("single-line queue reaches v/d") {
        const std::vector<double> arrivals{0, 1, 2, 3};
        const auto series = throughput_from_arrivals(arrivals);
        REQUIRE(series.samples.size() == 4);
        CHECK(!series.samples[0].f.has_value());
        CHECK(series.samples[0].n == 1);
        CHECK(series.samples.back().f.value() == doctest::Approx(1.0));
    }
    SUBCASE("single robot has no throughput value") {
        const std::vector<double> arrivals{5};
        const auto series = throughput_from_arrivals(arrivals);
        REQUIRE(series.samples.size() == 1);
        CHECK(series.samples[0].t == 0);
        CHECK(series.samples[0].n == 1);
        CHECK(!series.samples[0].f.has_value());
    }
    SUBCASE("half-second gaps") {
        const std::vector<double> arrivals{0, 0.5, 1.0, 1.5};
        const auto series = throughput_from_arrivals(arrivals);
        CHECK(series.samples.back().f.value() == doctest::Approx(2.0));
    }
    SUBCASE("rejects bad input") {
        CHECK_THROWS_AS(throughput_from_arrivals(std::vector<double>{}), std::domain_error);
        CHECK_THROWS_AS(throughput_from_arrivals(std::vector<double>{1, 0.5}), std::domain_error);
    }
}

TEST_CASE("mean interarrival throughput") {
    CHECK(mean_interarrival_throughput(std::vector<double>{0, 1, 2, 3}) == doctest::Approx(1.0));
    CHECK(mean_interarrival_throughput(std::vector<double>{0, 2}) == doctest::Approx(0.5));
    CHECK_THROWS_AS(mean_interarrival_throughput(std::vector<double>{1}), std::domain_error);
}

TEST_CASE("the two throughput definitions coincide") {
    std::mt19937_64 rng(123);
    std::uniform_real_distribution<double> gap(1e-3, 5.0);
    std::uniform_int_distribution<int> len(2, 60);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<double> arrivals{gap(rng)};
        const int n = len(rng);
        for (int i = 1; i < n; ++i) arrivals.push_back(arrivals.back() + gap(rng));
        const double def1 = mean_interarrival_throughput(arrivals);
        const double def2 = throughput_from_arrivals(arrivals).samples.back().f.value();
        CHECK(def2 == doctest::Approx(def1).epsilon(1e-12));
    }
}

TEST_CASE("series f values are reproducible from t and n") {
    const std::vector<double> arrivals{2, 2.5, 4, 4, 7.25};
    const auto series = throughput_from_arrivals(arrivals);
    for (const auto& s : series.samples) {
        if (!s.f) continue;
        CHECK(*s.f == doctest::Approx((s.n - 1) / s.t).epsilon(1e-15));
    }
}

TEST_CASE("series CSV shape") {
    const auto csv = throughput_from_arrivals(std::vector<double>{0, 2}).to_csv();
    CHECK(csv.substr(0, 6) == "t,n,f\n");
    CHECK(csv.find("0,1,\n") != std::string::npos);
    CHECK(csv.find("2,2,0.5\n") != std::string::npos);
}

TEST_CASE("swarm parameter validation") {
    CHECK_THROWS_AS(SwarmParams(0, 1, 1), std::domain_error);
    CHECK_THROWS_AS(SwarmParams(1, -1, 1), std::domain_error);
    CHECK_THROWS_AS(SwarmParams(1, 1, -0.5), std::domain_error);
    const SwarmParams ok(2, 0.5, 1);
    CHECK(ok.u() == doctest::Approx(2.0));
    CHECK(RatioU(ok).u == doctest::Approx(2.0));
    CHECK_THROWS_AS((void)RatioU(-1.0), std::domain_error);
}
