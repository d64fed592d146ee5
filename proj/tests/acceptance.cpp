// Acceptance suite: one pass/fail line per criterion.

#include "compact_lanes.hpp"
#include "comparison.hpp"
#include "core_model.hpp"
#include "hex_oracle.hpp"
#include "hex_packing.hpp"
#include "parallel_lanes.hpp"
#include "point_target.hpp"
#include "rounding.hpp"
#include "simulator.hpp"
#include "touch_run.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace swarm;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSqrt3 = std::numbers::sqrt3;

int failures = 0;

void criterion(int id, const std::string& what, const std::function<bool()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    std::string note;
    try {
        ok = body();
    } catch (const std::exception& e) {
        note = std::string(" (exception: ") + e.what() + ")";
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s [%6.2fs] criterion %2d: %s%s\n", ok ? "PASS" : "FAIL", secs, id,
                what.c_str(), note.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

long long analytic_count(const sim::SimConfig& cfg, double t) {
    switch (cfg.strategy) {
        case sim::Strategy::compact: {
            const auto lay = compact::layout(cfg.params);
            const double x = cfg.params.v * t / lay.d_e;
            return floor13(x) + floor13(x + 0.5) + 1;
        }
        case sim::Strategy::parallel: {
            const auto lay = parallel::layout(cfg.params);
            long long total = 0;
            for (int i = 1; i <= lay.lanes; ++i)
                total += parallel::robots_in_lane(i, t, cfg.params);
            return total;
        }
        case sim::Strategy::hex:
            return hex::count_total(t, hex::HexConfig(cfg.theta), cfg.params);
        case sim::Strategy::touchrun: {
            const auto c = touchrun::build_config(cfg.k, cfg.params);
            return cfg.k * floor13(cfg.params.v * t / c.d_o + 1.0);
        }
    }
    return 0;
}

bool sim_matches_closed_form(const sim::SimConfig& cfg) {
    const auto run = sim::run(cfg);
    if (!run.distance_ok) return false;
    const auto series = throughput_from_arrivals(run.arrival_times);
    for (size_t i = 0; i < series.samples.size(); ++i) {
        const auto& s = series.samples[i];
        if (s.t == 0) continue;
        if (i + 1 < series.samples.size() && series.samples[i + 1].t == s.t) continue;
        if (s.n != analytic_count(cfg, s.t)) {
            std::fprintf(stderr, "  mismatch at t=%.13g: measured %lld analytic %lld\n", s.t,
                         s.n, analytic_count(cfg, s.t));
            return false;
        }
    }
    return true;
}

bool c1_point_ratios() {
    const double r60 = point::normalized_delay(point::ApproachAngle(kPi / 3));
    const double r90 = point::normalized_delay(point::ApproachAngle(kPi / 2));
    return std::fabs(r60 - 1.1547) <= 1e-3 && std::fabs(r90 - 1.4142) <= 1e-3;
}

bool c2_compact() {
    for (double s : {0.3, 0.45}) {
        const SwarmParams p(1, 1, s);
        sim::SimConfig small{sim::Strategy::compact, p, 25, 0.1, 0, 0, {}};
        if (!sim_matches_closed_form(small)) return false;

        // measured throughput at T = 100 d/v against the asymptote
        const double T = 100.0;
        const int n = static_cast<int>(analytic_count(small, T)) + 4;
        sim::SimConfig big{sim::Strategy::compact, p, n, 0.1, 0, 0, {}};
        const auto run = sim::run(big);
        long long upto = 0;
        for (double t : run.arrival_times)
            if (round13(t - T) <= 0) ++upto;
        const double f = static_cast<double>(upto - 1) / T;
        const double expect = s == 0.3 ? 1.25 : 2.0;
        if (std::fabs(f - expect) / expect > 0.01) {
            std::fprintf(stderr, "  s=%g: f(100)=%.6f vs %.3f\n", s, f, expect);
            return false;
        }
    }
    return true;
}

bool c3_parallel() {
    if (std::llround(parallel::asymptotic(SwarmParams(1, 1, 3))) != 7) return false;
    if (std::llround(parallel::asymptotic(SwarmParams(1, 1, 6))) != 13) return false;
    for (double s : {3.0, 6.0}) {
        sim::SimConfig cfg{sim::Strategy::parallel, SwarmParams(1, 1, s), 200, 0.1, 0, 0, {}};
        if (!sim_matches_closed_form(cfg)) return false;
    }
    return true;
}

bool c4_hex_oracle() {
    const int samples = 1000;
    std::vector<int> bad(samples, 0);
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < samples; ++i) {
        std::mt19937_64 rng(0x5EEDULL * 0x9E3779B97F4A7C15ULL + i);
        std::uniform_real_distribution<double> u_dist(0.5, 10.0);
        std::uniform_real_distribution<double> th_dist(0.0, kPi / 3);
        std::uniform_real_distribution<double> t_dist(1e-3, 50.0);
        const SwarmParams p(1, 1, u_dist(rng));
        double theta = th_dist(rng);
        if (theta >= kPi / 3) theta = 0.0;
        const hex::HexConfig cfg(theta);
        const double T = t_dist(rng);
        if (hex::count_total(T, cfg, p) != oracle::count(T, cfg, p)) {
            bad[i] = 1;
#pragma omp critical
            std::fprintf(stderr, "  mismatch: s=%.17g theta=%.17g T=%.17g\n", p.s, theta, T);
        }
    }
    for (int b : bad)
        if (b) return false;
    return true;
}

bool c5_hex_bounds() {
    for (double s : {3.0, 6.0}) {
        const SwarmParams p(1, 1, s);
        const double cap = hex::upper_bound_asymptotic(p);
        for (double theta : {0.0, kPi / 12, kPi / 6, 5 * kPi / 18}) {
            const hex::HexConfig cfg(theta);
            const auto [lo, hi] = hex::asymptotic_bounds(cfg, p);
            const double f = hex::throughput_at(1e4, cfg, p);
            if (!(f > lo && f <= hi && f <= cap && hi <= cap + 1e-12)) {
                std::fprintf(stderr, "  s=%g theta=%g: f=%g not in (%g, %g] or above cap %g\n",
                             s, theta, f, lo, hi, cap);
                return false;
            }
        }
    }
    return true;
}

bool c6_touchrun_domain() {
    if (touchrun::lane_domain(SwarmParams(1, 1, 3)).second != 18) return false;
    if (touchrun::lane_domain(SwarmParams(1, 1, 6)).second != 37) return false;
    int max3 = 0, max6 = 0;
    for (int k = 3; k <= 18; ++k)
        if (touchrun::feasible(k, SwarmParams(0.1, 1, 3), kPi / 2)) max3 = k;
    for (int k = 3; k <= 37; ++k)
        if (touchrun::feasible(k, SwarmParams(0.1, 1, 6), kPi / 2)) max6 = k;
    return max3 == 16 && max6 == 33;
}

bool c7_touchrun_convergence() {
    const std::vector<std::pair<double, int>> cases = {{3, 10}, {3, 16}, {6, 19}, {6, 33}};
    for (auto [s, k] : cases) {
        const SwarmParams p(0.1, 1, s);
        sim::SimConfig cfg{sim::Strategy::touchrun, p, 200 * k, 0.1, 0, k, {}};
        const auto run = sim::run(cfg);
        if (!run.distance_ok) {
            std::fprintf(stderr, "  s=%g K=%d: min distance %.9f < d - v dt\n", s, k,
                         run.min_pair_distance);
            return false;
        }
        const double f = mean_interarrival_throughput(run.arrival_times);
        const double expect = touchrun::asymptotic(k, p);
        if (std::fabs(f - expect) / expect > 0.02) {
            std::fprintf(stderr, "  s=%g K=%d: f=%.6f vs %.6f (%.2f%%)\n", s, k, f, expect,
                         100 * std::fabs(f - expect) / expect);
            return false;
        }
    }
    return true;
}

bool c8_crossover() {
    for (int i = 0; i < 500; ++i) {
        const double u = 6.97 + i * 0.1;
        if (parallel::asymptotic(SwarmParams(1, 1, u)) >
            compare::f_h_min_of_u(u, 1, 1) + 1e-12)
            return false;
    }
    bool some_below = false;
    for (double u : {1.0, 2.0, 3.0, 4.5, 6.0}) {
        if (u < 6.96 &&
            parallel::asymptotic(SwarmParams(1, 1, u)) > compare::f_h_min_of_u(u, 1, 1))
            some_below = true;
    }
    return some_below;
}

bool c9_comparison_figures() {
    const auto points = compare::sweep({0.5, 7.0, 100, 1e4, 1.0, 1.0, 1000});
    bool parallel_wins_somewhere = false;
    for (const auto& pt : points) {
        if (pt.u >= 0.5 && pt.u <= 0.9 && pt.f_p && pt.f_h_at_T &&
            *pt.f_h_at_T < *pt.f_p)
            parallel_wins_somewhere = true;
        if (pt.f_t_at_T && pt.f_h_at_T && !(*pt.f_t_at_T > *pt.f_h_at_T)) {
            std::fprintf(stderr, "  u=%g: f_t=%g not above f_h=%g\n", pt.u, *pt.f_t_at_T,
                         *pt.f_h_at_T);
            return false;
        }
    }
    if (!parallel_wins_somewhere)
        std::fprintf(stderr, "  no u in [0.5, 0.9] with f_h(T) < f_p(T)\n");
    return parallel_wins_somewhere;
}

bool c10_properties() {
    // Def. 1 / Def. 2 equivalence
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> gap(1e-3, 4.0);
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<double> arrivals{0.0};
        for (int i = 0; i < 30; ++i) arrivals.push_back(arrivals.back() + gap(rng));
        const double d1 = mean_interarrival_throughput(arrivals);
        const double d2 = throughput_from_arrivals(arrivals).samples.back().f.value();
        if (std::fabs(d1 - d2) / d1 > 1e-12) return false;
    }

    // hex count monotone in T
    for (double theta : {0.05, kPi / 6, 0.9}) {
        const SwarmParams p(1, 1, 2.5);
        long long prev = 0;
        for (double T = 0.25; T < 20.0; T += 0.25) {
            const long long c = hex::count_total(T, hex::HexConfig(theta), p);
            if (c < prev) return false;
            prev = c;
        }
    }

    // lattice pairwise distance
    const SwarmParams p(1, 1, 3);
    const auto pts = oracle::enumerate_region(7.0, hex::HexConfig(0.4), p);
    for (size_t i = 0; i < pts.size(); ++i)
        for (size_t j = i + 1; j < pts.size(); ++j)
            if (std::hypot(pts[i].x - pts[j].x, pts[i].y - pts[j].y) < p.d - 1e-9) return false;

    // touch-and-run tangency: the arc grazes the target circle at s and both
    // arc endpoints sit at the turn distance d_r
    for (int k : {4, 10, 16}) {
        const auto c = touchrun::build_config(k, p);
        const double mid = 0.5 * c.alpha;
        const double cx = (c.r + p.s) * std::cos(mid), cy = (c.r + p.s) * std::sin(mid);
        const double e0 = mid + kPi / 2 + c.alpha / 2;
        const double span = kPi - c.alpha;
        if (std::fabs(std::hypot(cx + c.r * std::cos(e0), cy + c.r * std::sin(e0)) - c.d_r) >
            1e-9)
            return false;
        double closest = 1e300;
        for (int i = 0; i <= 2000; ++i) {
            const double ang = e0 + span * i / 2000.0;
            closest = std::min(closest,
                               std::hypot(cx + c.r * std::cos(ang), cy + c.r * std::sin(ang)));
        }
        const double exact = std::hypot(cx + c.r * std::cos(mid + kPi),
                                        cy + c.r * std::sin(mid + kPi));
        if (closest < p.s - 1e-9 || std::fabs(exact - p.s) > 1e-9) return false;
    }

    // manifests reproduce byte-identical outputs
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "swarmthru_acceptance";
    fs::remove_all(dir);
    fs::create_directories(dir);
    const std::string out1 = (dir / "a.csv").string(), out2 = (dir / "b.csv").string();
    const std::string base = std::string(SWARMTHRU_CLI_PATH) +
                             " simulate --strategy parallel --s 3 --n 40 --out ";
    if (std::system((base + out1).c_str()) != 0) return false;
    if (std::system((base + out2).c_str()) != 0) return false;
    auto slurp = [](const std::string& path) {
        std::ifstream in(path, std::ios::binary);
        std::stringstream ss;
        ss << in.rdbuf();
        return ss.str();
    };
    const std::string a = slurp(out1), b = slurp(out2);
    return !a.empty() && a == b;
}

}  // namespace

int main() {
    criterion(1, "point-target delay ratios at pi/3 and pi/2", c1_point_ratios);
    criterion(2, "compact lanes match the closed form and the asymptote", c2_compact);
    criterion(3, "parallel lanes asymptotics and exact simulation match", c3_parallel);
    criterion(4, "hex closed form equals enumeration on 1000 random configs", c4_hex_oracle);
    criterion(5, "hex long-horizon throughput inside the asymptotic bounds", c5_hex_bounds);
    criterion(6, "touch-and-run K domain and turning-rate reductions", c6_touchrun_domain);
    criterion(7, "touch-and-run simulations converge within 2%", c7_touchrun_convergence);
    criterion(8, "parallel/hex crossover at u around 6.96", c8_crossover);
    criterion(9, "comparison sweep reproduces the figure relations", c9_comparison_figures);
    criterion(10, "property suite: definitions, monotonicity, lattice, tangency, manifests",
              c10_properties);
    if (failures) std::printf("%d criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
