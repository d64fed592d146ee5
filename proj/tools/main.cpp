#include "CLI11.hpp"
#include "json.hpp"

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

#ifdef _OPENMP
#include <omp.h>
#endif

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr const char* kVersion = "0.1.0";
constexpr double kPi = std::numbers::pi;

using json = nlohmann::json;
using namespace swarm;

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

// Collects rows, then lands them on disk (or stdout) together with a
// manifest so every output is reproducible from its parameters.
struct OutputSink {
    std::string command;
    json parameters;
    std::vector<std::pair<std::string, std::string>> files;  // path (or "-"), content
    std::chrono::steady_clock::time_point started = std::chrono::steady_clock::now();

    void add(const std::string& path, std::string content) {
        files.emplace_back(path, std::move(content));
    }

    int flush() {
        std::vector<std::string> paths;
        for (auto& [path, content] : files) {
            if (path == "-") {
                std::cout << content;
                continue;
            }
            std::ofstream out(path, std::ios::binary);
            if (!out) {
                std::cerr << "error: cannot open output file " << path << "\n";
                return 1;
            }
            out << content;
            paths.push_back(path);
        }
        if (!paths.empty()) {
            const double secs =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
            json manifest = {{"command", command},
                             {"parameters", parameters},
                             {"tool_version", kVersion},
                             {"outputs", paths},
                             {"wall_clock_sec", secs}};
            std::ofstream m(paths.front() + ".manifest.json", std::ios::binary);
            m << manifest.dump(2) << "\n";
        }
        return 0;
    }
};

void apply_jobs(int jobs) {
#ifdef _OPENMP
    if (jobs > 0) omp_set_num_threads(jobs);
#else
    (void)jobs;
#endif
}

int default_jobs() {
    if (const char* env = std::getenv("STL_JOBS")) {
        const int j = std::atoi(env);
        if (j > 0) return j;
    }
    return 0;  // library default
}

std::string point_csv(int samples) {
    std::ostringstream out;
    out << "theta,delay_ratio\n";
    for (int i = 0; i < samples; ++i) {
        const double theta = i * (kPi / samples);
        out << fmt(theta) << ',' << fmt(point::normalized_delay(point::ApproachAngle(theta)))
            << '\n';
    }
    return out.str();
}

std::string analytic_csv(const std::string& kind, const SwarmParams& p, double t_max, double dt,
                         double theta, int k) {
    std::ostringstream out;
    if (kind == "hex") {
        const hex::HexConfig cfg(theta);
        const auto [lo, hi] = hex::asymptotic_bounds(cfg, p);
        out << "t,f_analytic,f_low,f_high\n";
        for (long long i = 1; round13(i * dt - t_max) <= 0; ++i) {
            const double t = i * dt;
            out << fmt(t) << ',' << fmt(hex::throughput_at(t, cfg, p)) << ',' << fmt(lo) << ','
                << fmt(hi) << '\n';
        }
        return out.str();
    }
    out << "t,f_analytic,f_asymptotic\n";
    for (long long i = 1; round13(i * dt - t_max) <= 0; ++i) {
        const double t = i * dt;
        double f, fa;
        if (kind == "compact") {
            f = compact::throughput_at(t, p);
            fa = compact::asymptotic(p);
        } else if (kind == "parallel") {
            f = parallel::throughput_at(t, p);
            fa = parallel::asymptotic(p);
        } else {
            f = touchrun::throughput_at(k, t, p);
            fa = touchrun::asymptotic(k, p);
        }
        out << fmt(t) << ',' << fmt(f) << ',' << fmt(fa) << '\n';
    }
    return out.str();
}

std::string hex_breakdown_json(const SwarmParams& p, double t_max, double dt, double theta) {
    const hex::HexConfig cfg(theta);
    json rows = json::array();
    for (long long i = 1; round13(i * dt - t_max) <= 0; ++i) {
        const double t = i * dt;
        const auto b = hex::count_breakdown(t, cfg, p);
        rows.push_back({{"t", t},
                        {"n_l_minus", b.n_l_minus},
                        {"n_l_plus", b.n_l_plus},
                        {"k_prime", b.k_prime},
                        {"rect_count", b.rect_count},
                        {"semi_count", b.semi_count},
                        {"last_x", b.last_x},
                        {"last_y", b.last_y},
                        {"c_x", b.c_x},
                        {"c_rot_x", b.c_rot_x},
                        {"c_rot_y", b.c_rot_y},
                        {"col_lo", b.col_lo},
                        {"col_hi", b.col_hi}});
    }
    return rows.dump(2) + "\n";
}

std::string scan_k_csv(const SwarmParams& p, std::optional<double> omega_max) {
    const auto [k_lo, k_hi] = touchrun::lane_domain(p);
    std::ostringstream out;
    out << "k,f_asymptotic,feasible\n";
    for (int k = k_lo; k <= k_hi; ++k)
        out << k << ',' << fmt(touchrun::asymptotic(k, p)) << ','
            << (touchrun::feasible(k, p, omega_max) ? 1 : 0) << '\n';
    return out.str();
}

std::string sweep_csv(const compare::SweepSpec& spec) {
    const auto points = compare::sweep(spec);
    std::ostringstream out;
    out << "u,f_p,f_h_min,f_h_max,f_h_T,f_t_T,f_t_asym\n";
    auto cell = [](const std::optional<double>& v) { return v ? fmt(*v) : std::string(); };
    for (const auto& pt : points)
        out << fmt(pt.u) << ',' << cell(pt.f_p) << ',' << cell(pt.f_h_min) << ','
            << cell(pt.f_h_max) << ',' << cell(pt.f_h_at_T) << ',' << cell(pt.f_t_at_T) << ','
            << cell(pt.f_t_asym) << '\n';
    return out.str();
}

struct OracleCheckResult {
    int failures = 0;
    std::string report;
};

OracleCheckResult oracle_check_hex(int samples, unsigned long long seed) {
    std::vector<int> bad(samples, 0);
    std::vector<std::string> rows(samples);
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < samples; ++i) {
        std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ULL + static_cast<unsigned long long>(i));
        std::uniform_real_distribution<double> u_dist(0.5, 10.0);
        std::uniform_real_distribution<double> th_dist(0.0, kPi / 3);
        std::uniform_real_distribution<double> t_dist(1e-3, 50.0);
        const double u = u_dist(rng);
        double theta = th_dist(rng);
        if (theta >= kPi / 3) theta = 0.0;
        const double T = t_dist(rng);
        const SwarmParams p(1.0, 1.0, u);
        const hex::HexConfig cfg(theta);
        const long long closed = hex::count_total(T, cfg, p);
        const long long brute = oracle::count(T, cfg, p);
        if (closed != brute) {
            bad[i] = 1;
            std::ostringstream row;
            row << "MISMATCH u=" << fmt(u) << " theta=" << fmt(theta) << " T=" << fmt(T)
                << " closed=" << closed << " oracle=" << brute << "\n";
            rows[i] = row.str();
        }
    }
    OracleCheckResult res;
    std::ostringstream out;
    for (int i = 0; i < samples; ++i) {
        if (bad[i]) {
            ++res.failures;
            out << rows[i];
        }
    }
    out << (samples - res.failures) << "/" << samples << " OK\n";
    res.report = out.str();
    return res;
}

std::string sim_series_csv(const sim::RunResult& run) {
    return throughput_from_arrivals(run.arrival_times).to_csv();
}

// Simulation vs analytic columns at the measured arrival instants.
std::string sim_vs_analytic_csv(const sim::SimConfig& cfg, const sim::RunResult& run) {
    const auto series = throughput_from_arrivals(run.arrival_times);
    std::ostringstream out;
    const bool is_hex = cfg.strategy == sim::Strategy::hex;
    out << (is_hex ? "t,f_sim,f_analytic,f_low,f_high\n" : "t,f_sim,f_analytic,f_asymptotic\n");
    for (size_t i = 0; i < series.samples.size(); ++i) {
        const auto& s = series.samples[i];
        if (!s.f) continue;
        // simultaneous arrivals collapse to one row per instant
        if (i + 1 < series.samples.size() && series.samples[i + 1].t == s.t) continue;
        double f = 0;
        switch (cfg.strategy) {
            case sim::Strategy::compact: f = compact::throughput_at(s.t, cfg.params); break;
            case sim::Strategy::parallel: f = parallel::throughput_at(s.t, cfg.params); break;
            case sim::Strategy::hex:
                f = hex::throughput_at(s.t, hex::HexConfig(cfg.theta), cfg.params);
                break;
            case sim::Strategy::touchrun:
                f = touchrun::throughput_at(cfg.k, s.t, cfg.params);
                break;
        }
        out << fmt(s.t) << ',' << fmt(*s.f) << ',' << fmt(f);
        if (is_hex) {
            const auto [lo, hi] =
                hex::asymptotic_bounds(hex::HexConfig(cfg.theta), cfg.params);
            out << ',' << fmt(lo) << ',' << fmt(hi);
        } else if (cfg.strategy == sim::Strategy::compact) {
            out << ',' << fmt(compact::asymptotic(cfg.params));
        } else if (cfg.strategy == sim::Strategy::parallel) {
            out << ',' << fmt(parallel::asymptotic(cfg.params));
        } else {
            out << ',' << fmt(touchrun::asymptotic(cfg.k, cfg.params));
        }
        out << '\n';
    }
    return out.str();
}

int run_figures(const std::string& fig, const std::string& out_dir, OutputSink& sink) {
    namespace fs = std::filesystem;
    fs::create_directories(out_dir);
    auto path = [&](const std::string& name) { return (fs::path(out_dir) / name).string(); };
    bool matched = false;
    auto want = [&](const std::string& name) {
        const bool w = fig == "all" || fig == name;
        matched = matched || w;
        return w;
    };

    if (want("results1qw")) {
        for (double s : {0.3, 0.45}) {
            sim::SimConfig cfg{sim::Strategy::compact, SwarmParams(1, 1, s), 25, 0.1, 0, 0, {}};
            sink.add(path("results1qw_s" + fmt(s) + ".csv"),
                     sim_vs_analytic_csv(cfg, sim::run(cfg)));
        }
    }
    if (want("tppar")) {
        for (double s : {3.0, 6.0}) {
            sim::SimConfig cfg{sim::Strategy::parallel, SwarmParams(1, 1, s), 200, 0.1, 0, 0, {}};
            sink.add(path("tppar_s" + fmt(s) + ".csv"), sim_vs_analytic_csv(cfg, sim::run(cfg)));
        }
    }
    if (want("tphex")) {
        for (double s : {3.0, 6.0}) {
            for (double theta : {0.0, kPi / 12, kPi / 6, 5 * kPi / 18}) {
                const SwarmParams p(1, 1, s);
                const int n =
                    static_cast<int>(hex::count_total(10.0, hex::HexConfig(theta), p));
                sim::SimConfig cfg{sim::Strategy::hex, p, n, 0.1, theta, 0, {}};
                sink.add(path("tphex_s" + fmt(s) + "_th" + fmt(theta) + ".csv"),
                         sim_vs_analytic_csv(cfg, sim::run(cfg)));
            }
        }
    }
    if (want("tpit")) {
        const std::vector<std::pair<double, int>> cases = {{3, 10}, {3, 16}, {6, 19}, {6, 33}};
        for (auto [s, k] : cases) {
            sim::SimConfig cfg{sim::Strategy::touchrun, SwarmParams(0.1, 1, s), 200, 0.1, 0, k, {}};
            sink.add(path("tpit_s" + fmt(s) + "_k" + std::to_string(k) + ".csv"),
                     sim_vs_analytic_csv(cfg, sim::run(cfg)));
        }
    }
    if (want("ksit")) {
        for (double s : {3.0, 6.0}) {
            const SwarmParams p(0.1, 1, s);
            const auto [k_lo, k_hi] = touchrun::lane_domain(p);
            std::ostringstream out;
            out << "k,f_sim,f_asymptotic\n";
            for (int k = k_lo; k <= k_hi; ++k) {
                if (!touchrun::feasible(k, p, kPi / 2)) continue;
                sim::SimConfig cfg{sim::Strategy::touchrun, p, 200, 0.1, 0, k, kPi / 2};
                const auto run = sim::run(cfg);
                const double f = mean_interarrival_throughput(run.arrival_times);
                out << k << ',' << fmt(f) << ',' << fmt(touchrun::asymptotic(k, p)) << '\n';
            }
            sink.add(path("ksit_s" + fmt(s) + ".csv"), out.str());
        }
    }
    if (want("fhfpLarge")) {
        sink.add(path("fhfpLarge.csv"), sweep_csv({0.0, 7.0, 100, 1e4, 1.0, 1.0, 1000}));
    }
    if (want("fhfpZoom")) {
        for (double v : {0.1, 1.0})
            sink.add(path("fhfpZoom_v" + fmt(v) + ".csv"),
                     sweep_csv({0.4, 1.0, 100, 1e4, v, 1.0, 1000}));
    }
    if (want("numhigherftfh")) {
        std::ostringstream out;
        out << "u,f_t_asym,f_h_min,f_h_max\n";
        const double u0 = 1.0 / std::numbers::sqrt3;
        for (int i = 0; i < 200; ++i) {
            const double u = u0 * std::pow(1000.0 / u0, i / 199.0);
            out << fmt(u) << ',' << fmt(compare::f_t_of_u(u, std::nullopt, 1, 1)) << ','
                << fmt(compare::f_h_min_of_u(u, 1, 1)) << ',' << fmt(compare::f_h_max_of_u(u, 1, 1))
                << '\n';
        }
        sink.add(path("numhigherftfh.csv"), out.str());
        std::ostringstream zoom;
        zoom << "u,f_t_asym,f_h_min,f_h_max\n";
        for (int i = 0; i < 200; ++i) {
            const double u = u0 + (1.25 - u0) * i / 199.0;
            zoom << fmt(u) << ',' << fmt(compare::f_t_of_u(u, std::nullopt, 1, 1)) << ','
                 << fmt(compare::f_h_min_of_u(u, 1, 1)) << ','
                 << fmt(compare::f_h_max_of_u(u, 1, 1)) << '\n';
        }
        sink.add(path("numhigherftfh_zoom.csv"), zoom.str());
    }
    if (want("ftbelowfh")) {
        sink.add(path("ftbelowfh.csv"),
                 sweep_csv({1.0 / std::numbers::sqrt3, 7.0, 100, 1e4, 1.0, 1.0, 1000}));
    }
    if (want("grafKthroughput")) {
        std::ostringstream out;
        out << "s,d,k,f_asymptotic\n";
        for (auto [s, d] : std::vector<std::pair<double, double>>{{3, 1}, {6, 1}}) {
            const SwarmParams p(1, d, s);
            const auto [k_lo, k_hi] = touchrun::lane_domain(p);
            for (int k = k_lo; k <= k_hi; ++k)
                out << fmt(s) << ',' << fmt(d) << ',' << k << ','
                    << fmt(touchrun::asymptotic(k, p)) << '\n';
        }
        sink.add(path("grafKthroughput.csv"), out.str());
    }
    if (want("limitshexpack")) {
        std::ostringstream out;
        out << "s,f_upper\n";
        for (int i = 0; i <= 190; ++i) {
            const double s = 0.5 + i * 0.05;
            out << fmt(s) << ',' << fmt(hex::upper_bound_asymptotic(SwarmParams(1, 1, s))) << '\n';
        }
        sink.add(path("limitshexpack.csv"), out.str());
    }
    if (!matched) {
        std::cerr << "error: unknown figure '" << fig << "'\n";
        return 2;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Common-target-area throughput of robotic swarm strategies"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    int jobs = default_jobs();
    app.add_option("--jobs", jobs, "worker threads for sweeps (default: env STL_JOBS)");
    bool deg = false;
    app.add_flag("--deg", deg, "interpret angle options in degrees");

    // throughput: analytic curves per strategy
    auto* thr = app.add_subcommand("throughput", "analytic throughput curves");
    thr->require_subcommand(1);
    double s = 3, d = 1, v = 1, t_max = 10, dt = 0.1, theta = 0, omega_max = 0;
    int k = 0, samples = 100;
    std::string out_path = "-";

    auto* tp = thr->add_subcommand("point", "normalized delay versus approach angle");
    tp->add_option("--samples", samples, "sample count over [0, pi)")->capture_default_str();
    tp->add_option("--out", out_path, "output CSV path, - for stdout");

    auto add_common = [&](CLI::App* cmd, bool with_tmax = true) {
        cmd->add_option("--s", s, "target radius")->capture_default_str();
        cmd->add_option("--d", d, "minimum robot distance")->capture_default_str();
        cmd->add_option("--v", v, "robot speed")->capture_default_str();
        if (with_tmax) {
            cmd->add_option("--t-max", t_max, "time horizon")->capture_default_str();
            cmd->add_option("--dt", dt, "sample step")->capture_default_str();
        }
        cmd->add_option("--out", out_path, "output CSV path, - for stdout");
    };

    auto* tc = thr->add_subcommand("compact", "compact lanes, 0 < s < d/2");
    add_common(tc);
    auto* tpar = thr->add_subcommand("parallel", "parallel lanes, s >= d/2");
    add_common(tpar);
    auto* th = thr->add_subcommand("hex", "hexagonal packing");
    add_common(th);
    th->add_option("--theta", theta, "packing angle in [0, pi/3)")->capture_default_str();
    bool breakdown = false;
    th->add_flag("--breakdown", breakdown, "emit per-T count breakdown JSON instead of CSV");
    auto* tt = thr->add_subcommand("touchrun", "touch and run");
    add_common(tt);
    tt->add_option("--k", k, "lane count");
    bool scan_k = false;
    tt->add_flag("--scan-k", scan_k, "emit k,f_asymptotic,feasible over the K domain");
    tt->add_option("--omega-max", omega_max, "turning-rate cap, rad/s (0 = none)");

    // simulate
    auto* sc = app.add_subcommand("simulate", "kinematic simulation producing arrival logs");
    std::string strategy_name, trace_path;
    int n_robots = 25;
    double sim_v = -1;
    sc->add_option("--strategy", strategy_name, "compact|parallel|hex|touchrun")->required();
    sc->add_option("--s", s, "target radius")->capture_default_str();
    sc->add_option("--d", d, "minimum robot distance")->capture_default_str();
    sc->add_option("--v", sim_v, "robot speed (default 1, touchrun 0.1)");
    sc->add_option("--n", n_robots, "robot count")->capture_default_str();
    sc->add_option("--dt", dt, "sampling step")->capture_default_str();
    sc->add_option("--theta", theta, "hex packing angle");
    sc->add_option("--k", k, "touch-and-run lane count");
    sc->add_option("--omega-max", omega_max, "turning-rate cap (0 = none)");
    sc->add_option("--out", out_path, "arrivals CSV path, - for stdout");
    sc->add_option("--trace", trace_path, "optional trace CSV: t,robot_id,x,y,phase");

    // compare
    auto* cc = app.add_subcommand("compare", "strategy comparison over u = s/d");
    double u_min = 0, u_max = 7, cmp_t = 1e4;
    int points = 100, theta_samples = 1000;
    cc->add_option("--u-min", u_min)->capture_default_str();
    cc->add_option("--u-max", u_max)->capture_default_str();
    cc->add_option("--points", points)->capture_default_str();
    cc->add_option("--t", cmp_t, "evaluation time")->capture_default_str();
    cc->add_option("--v", v)->capture_default_str();
    cc->add_option("--d", d)->capture_default_str();
    cc->add_option("--theta-samples", theta_samples)->capture_default_str();
    cc->add_option("--out", out_path, "output CSV path, - for stdout");

    // oracle-check
    auto* oc = app.add_subcommand("oracle-check", "closed form versus brute-force enumeration");
    auto* oh = oc->add_subcommand("hex", "hexagonal counting check");
    int oc_samples = 1000;
    unsigned long long oc_seed = 7;
    oh->add_option("--samples", oc_samples)->capture_default_str();
    oh->add_option("--seed", oc_seed)->capture_default_str();

    // figures
    auto* fc = app.add_subcommand("figures", "regenerate the experiment figure data");
    std::string fig = "all", out_dir = "figures";
    fc->add_option("--fig", fig, "figure name or 'all'")->capture_default_str();
    fc->add_option("--out-dir", out_dir)->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    apply_jobs(jobs);
    const double angle_scale = deg ? kPi / 180.0 : 1.0;
    theta *= angle_scale;

    OutputSink sink;
    try {
        if (tp->parsed()) {
            sink.command = "throughput point";
            sink.parameters = {{"samples", samples}};
            sink.add(out_path, point_csv(samples));
        } else if (tc->parsed() || tpar->parsed() || th->parsed() || tt->parsed()) {
            const SwarmParams p(v, d, s);
            const std::string kind = tc->parsed()    ? "compact"
                                     : tpar->parsed() ? "parallel"
                                     : th->parsed()   ? "hex"
                                                      : "touchrun";
            sink.command = "throughput " + kind;
            sink.parameters = {{"s", s}, {"d", d}, {"v", v}, {"t_max", t_max}, {"dt", dt}};
            if (th->parsed()) sink.parameters["theta"] = theta;
            if (tt->parsed()) {
                sink.parameters["k"] = k;
                if (omega_max > 0) sink.parameters["omega_max"] = omega_max;
            }
            if (th->parsed() && breakdown) {
                sink.add(out_path, hex_breakdown_json(p, t_max, dt, theta));
            } else if (tt->parsed() && scan_k) {
                sink.add(out_path,
                         scan_k_csv(p, omega_max > 0 ? std::optional<double>(omega_max)
                                                     : std::nullopt));
            } else {
                if (tt->parsed() && k == 0)
                    throw std::domain_error("touch and run: --k required (or use --scan-k)");
                sink.add(out_path, analytic_csv(kind, p, t_max, dt, theta, k));
            }
        } else if (sc->parsed()) {
            const sim::Strategy strat = sim::strategy_from_name(strategy_name);
            if (sim_v <= 0) sim_v = strat == sim::Strategy::touchrun ? 0.1 : 1.0;
            sim::SimConfig cfg{strat,     SwarmParams(sim_v, d, s),
                               n_robots,  dt,
                               theta,     k,
                               omega_max > 0 ? std::optional<double>(omega_max) : std::nullopt};
            sink.command = "simulate";
            sink.parameters = {{"strategy", strategy_name}, {"s", s},   {"d", d},
                               {"v", sim_v},                {"n", n_robots}, {"dt", dt},
                               {"theta", theta},            {"k", k}};
            std::ostringstream trace;
            const auto result = sim::run(cfg, trace_path.empty() ? nullptr : &trace);
            if (!result.distance_ok) {
                std::cerr << "warning: min pairwise distance "
                          << fmt(result.min_pair_distance) << " fell below d - v*dt\n";
            }
            sink.add(out_path, sim_series_csv(result));
            if (!trace_path.empty())
                sink.add(trace_path, "t,robot_id,x,y,phase\n" + trace.str());
        } else if (cc->parsed()) {
            sink.command = "compare";
            sink.parameters = {{"u_min", u_min}, {"u_max", u_max},
                               {"points", points}, {"t", cmp_t},
                               {"v", v},           {"d", d},
                               {"theta_samples", theta_samples}};
            sink.add(out_path, sweep_csv({u_min, u_max, points, cmp_t, v, d, theta_samples}));
        } else if (oh->parsed()) {
            const auto res = oracle_check_hex(oc_samples, oc_seed);
            std::cout << res.report;
            return res.failures == 0 ? 0 : 1;
        } else if (fc->parsed()) {
            sink.command = "figures";
            sink.parameters = {{"fig", fig}, {"out_dir", out_dir}};
            const int rc = run_figures(fig, out_dir, sink);
            if (rc != 0) return rc;
        }
        return sink.flush();
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
