#include "simulator.hpp"

#include "compact_lanes.hpp"
#include "hex_oracle.hpp"
#include "hex_packing.hpp"
#include "parallel_lanes.hpp"
#include "rounding.hpp"
#include "touch_run.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <ostream>
#include <stdexcept>

namespace swarm::sim {

namespace {

constexpr double kPi = std::numbers::pi;

// round13 costs a libm call; values far from the boundary need no rounding.
inline bool le_rounded(double lhs, double rhs) {
    const double diff = lhs - rhs;
    if (diff < -1e-9) return true;
    if (diff > 1e-9) return false;
    return round13(diff) <= 0;
}

inline bool ge_rounded(double lhs, double rhs) {
    const double diff = lhs - rhs;
    if (diff > 1e-9) return true;
    if (diff < -1e-9) return false;
    return round13(diff) >= 0;
}

struct LaneGeometry {
    double in_x, in_y;    // unit entry direction
    double out_x, out_y;  // unit exit direction
    double exit_angle;    // beta
    double ex, ey;        // turn-start point on the entry line
};

std::vector<LaneGeometry> lane_geometries(const touchrun::Config& c, const SwarmParams& p) {
    std::vector<LaneGeometry> out(c.k);
    for (int lane = 0; lane < c.k; ++lane) {
        const double mid = (lane + 0.5) * c.alpha;
        const double phi1 = mid + c.alpha / 2;
        const double cx = (c.r + p.s) * std::cos(mid);
        const double cy = (c.r + p.s) * std::sin(mid);
        const double ea = mid + kPi / 2 + c.alpha / 2;  // radius angle of the turn start
        LaneGeometry g;
        g.in_x = -std::cos(phi1);
        g.in_y = -std::sin(phi1);
        g.exit_angle = mid - c.alpha / 2;
        g.out_x = std::cos(g.exit_angle);
        g.out_y = std::sin(g.exit_angle);
        g.ex = cx + c.r * std::cos(ea);
        g.ey = cy + c.r * std::sin(ea);
        out[lane] = g;
    }
    return out;
}

// Start offset behind the turn point, deliberately not aligned with the
// sampling grid so the turn trigger is generic.
double entry_pad(const SwarmParams& p) { return 0.777 * p.d; }

struct Seed {
    RobotState state;
    double key;  // arrival order
};

std::vector<RobotState> take_first_by_arrival(std::vector<Seed>& seeds, int n) {
    std::stable_sort(seeds.begin(), seeds.end(),
                     [](const Seed& a, const Seed& b) { return a.key < b.key; });
    if (static_cast<size_t>(n) > seeds.size())
        throw std::domain_error("simulator: not enough seeded robots");
    size_t take = n;
    // include robots tying the cut-off arrival, so measured counts match the
    // analytic ones at the final instant
    while (take < seeds.size() && round13(seeds[take].key - seeds[n - 1].key) == 0) ++take;
    std::vector<RobotState> out;
    out.reserve(take);
    for (size_t i = 0; i < take; ++i) out.push_back(seeds[i].state);
    return out;
}

RobotState straight_robot(double x, double y, int lane) {
    RobotState r{};
    r.x = x;
    r.y = y;
    r.dir_x = -1.0;
    r.dir_y = 0.0;
    r.lane = lane;
    return r;
}

std::vector<RobotState> place_compact(const SimConfig& cfg) {
    const auto& p = cfg.params;
    const auto lay = compact::layout(p);
    std::vector<RobotState> out;
    out.reserve(cfg.n_robots);
    for (int j = 0; j < cfg.n_robots; ++j) {
        const int k = j / 2;
        if (j % 2 == 0)  // top lane holds the first robot
            out.push_back(straight_robot(k * lay.d_e, p.s, 0));
        else
            out.push_back(straight_robot(lay.d_p + k * lay.d_e, -p.s, 1));
    }
    return out;
}

std::vector<RobotState> place_parallel(const SimConfig& cfg) {
    const auto& p = cfg.params;
    const auto lay = parallel::layout(p);
    const double dJ = lay.d_extra[lay.first_lane - 1];
    const int per_lane = cfg.n_robots / lay.lanes + lay.lanes + 2;
    std::vector<Seed> seeds;
    seeds.reserve(static_cast<size_t>(lay.lanes) * per_lane);
    for (int i = 1; i <= lay.lanes; ++i) {
        for (int k = 0; k < per_lane; ++k) {
            Seed s{straight_robot(p.s + k * p.d, p.s - (i - 1) * p.d, i),
                   (lay.d_extra[i - 1] - dJ + k * p.d) / p.v};
            seeds.push_back(s);
        }
    }
    return take_first_by_arrival(seeds, cfg.n_robots);
}

std::vector<RobotState> place_hex(const SimConfig& cfg) {
    const auto& p = cfg.params;
    const hex::HexConfig hc(cfg.theta);
    // Corridor depth holding comfortably more than n robots.
    const double depth =
        1.3 * cfg.n_robots * std::numbers::sqrt3 * p.d * p.d / (4.0 * p.s) + p.s + 10.0 * p.d;
    const double horizon = (depth + p.s) / p.v;
    auto points =
        oracle::enumerate_region_at(horizon, hc.theta, p, hex::anchor_x(p), hex::anchor_y(p));
    std::vector<Seed> seeds;
    seeds.reserve(points.size());
    for (const auto& pt : points) {
        const double travel = pt.x - std::sqrt(std::max(0.0, p.s * p.s - pt.y * pt.y));
        seeds.push_back({straight_robot(pt.x, pt.y, 0), travel / p.v});
    }
    if (static_cast<int>(seeds.size()) < cfg.n_robots)
        throw std::domain_error("simulator: hex corridor depth underestimated");
    return take_first_by_arrival(seeds, cfg.n_robots);
}

std::vector<RobotState> place_touchrun(const SimConfig& cfg) {
    const auto& p = cfg.params;
    const auto c = touchrun::build_config(cfg.k, p);
    if (cfg.omega_max && !touchrun::feasible(cfg.k, p, cfg.omega_max))
        throw std::domain_error("simulator: K exceeds the turning-rate cap");
    if (c.r <= 0)
        throw std::domain_error("simulator: K at the domain boundary has zero turning radius");
    const auto lanes = lane_geometries(c, p);
    const double pad = entry_pad(p);
    std::vector<RobotState> out;
    out.reserve(cfg.n_robots);
    const int base = cfg.n_robots / c.k, extra = cfg.n_robots % c.k;
    for (int lane = 0; lane < c.k; ++lane) {
        const LaneGeometry& g = lanes[lane];
        const int count = base + (lane < extra ? 1 : 0);
        for (int j = 0; j < count; ++j) {
            RobotState r{};
            r.lane = lane;
            r.dir_x = g.in_x;
            r.dir_y = g.in_y;
            const double back = pad + j * c.d_o;
            r.x = g.ex - back * g.in_x;
            r.y = g.ey - back * g.in_y;
            out.push_back(r);
        }
    }
    return out;
}

// Flat open-addressing spatial hash over 3d-sized cells with an intrusive
// per-cell robot list; robots re-file after drifting d/2.
struct AuditGrid {
    double cell;
    size_t mask;
    std::vector<long long> keys;   // packed cell coordinate per slot, -1 empty
    std::vector<int> heads;        // first robot in the cell
    std::vector<int> next;         // intrusive list over robots
    std::vector<long long> robot_key;
    std::vector<double> anchor_x, anchor_y;

    static long long pack(long long ix, long long iy) {
        return (ix << 24) ^ (iy & 0xFFFFFF);
    }

    size_t slot_of(long long key) const {
        size_t h = static_cast<size_t>(key) * 0x9E3779B97F4A7C15ULL;
        h ^= h >> 29;
        size_t s = h & mask;
        while (keys[s] != key && keys[s] != -1) s = (s + 1) & mask;
        return s;
    }

    void init(const std::vector<RobotState>& world, double d) {
        cell = 3.0 * d;
        size_t cap = 64;
        while (cap < 4 * world.size()) cap <<= 1;
        mask = cap - 1;
        keys.assign(cap, -1);
        heads.assign(cap, -1);
        next.assign(world.size(), -1);
        robot_key.resize(world.size());
        anchor_x.resize(world.size());
        anchor_y.resize(world.size());
        for (size_t i = 0; i < world.size(); ++i)
            file(static_cast<int>(i), world[i].x, world[i].y);
    }

    long long key_of(double x, double y) const {
        return pack(static_cast<long long>(std::floor(x / cell)),
                    static_cast<long long>(std::floor(y / cell)));
    }

    void file(int i, double x, double y) {
        const long long key = key_of(x, y);
        robot_key[i] = key;
        anchor_x[i] = x;
        anchor_y[i] = y;
        const size_t s = slot_of(key);
        keys[s] = key;
        next[i] = heads[s];
        heads[s] = i;
    }

    // Cells are never unlinked individually; the table is rebuilt wholesale
    // so abandoned keys cannot clog the probe chains.
    void rebuild(const std::vector<double>& px, const std::vector<double>& py) {
        std::fill(keys.begin(), keys.end(), -1);
        std::fill(heads.begin(), heads.end(), -1);
        for (size_t i = 0; i < px.size(); ++i) file(static_cast<int>(i), px[i], py[i]);
    }
};

}  // namespace

double RobotState::heading() const { return std::atan2(dir_y, dir_x); }

Strategy strategy_from_name(const std::string& name) {
    if (name == "compact") return Strategy::compact;
    if (name == "parallel") return Strategy::parallel;
    if (name == "hex") return Strategy::hex;
    if (name == "touchrun") return Strategy::touchrun;
    throw std::domain_error("simulator: unknown strategy '" + name + "'");
}

const char* strategy_name(Strategy s) {
    switch (s) {
        case Strategy::compact: return "compact";
        case Strategy::parallel: return "parallel";
        case Strategy::hex: return "hex";
        case Strategy::touchrun: return "touchrun";
    }
    return "?";
}

std::vector<RobotState> place_initial(const SimConfig& cfg) {
    if (cfg.n_robots < 2) throw std::domain_error("simulator: n_robots >= 2 required");
    if (cfg.dt <= 0) throw std::domain_error("simulator: dt > 0 required");
    switch (cfg.strategy) {
        case Strategy::compact: return place_compact(cfg);
        case Strategy::parallel: return place_parallel(cfg);
        case Strategy::hex: return place_hex(cfg);
        case Strategy::touchrun: return place_touchrun(cfg);
    }
    throw std::domain_error("simulator: unknown strategy");
}

namespace {

// Per-run constants of the touch-and-run stepper.
struct TouchContext {
    touchrun::Config c;
    std::vector<LaneGeometry> lanes;
    double arc_span;
    double dphi, cs, sn;
};

TouchContext make_touch_context(const SimConfig& cfg) {
    TouchContext ctx{touchrun::build_config(cfg.k, cfg.params), {}, 0, 0, 0, 0};
    ctx.lanes = lane_geometries(ctx.c, cfg.params);
    ctx.arc_span = kPi - ctx.c.alpha;
    ctx.dphi = ctx.c.omega * cfg.dt;
    ctx.cs = std::cos(ctx.dphi);
    ctx.sn = std::sin(ctx.dphi);
    return ctx;
}

inline void step_touchrun_robot(RobotState& r, const TouchContext& ctx, const SwarmParams& p,
                                double dt) {
    switch (r.phase) {
        case Phase::entry: {
            r.x += p.v * dt * r.dir_x;
            r.y += p.v * dt * r.dir_y;
            if (round13(r.x * r.x + r.y * r.y - ctx.c.d_r * ctx.c.d_r) <= 0) {
                r.phase = Phase::arc;
                r.swept = 0;
                // left turn: centre sits 90 degrees left of the heading
                r.turn_cx = r.x - ctx.c.r * r.dir_y;
                r.turn_cy = r.y + ctx.c.r * r.dir_x;
            }
            break;
        }
        case Phase::arc: {
            const double px = r.x - r.turn_cx, py = r.y - r.turn_cy;
            r.x = r.turn_cx + ctx.cs * px - ctx.sn * py;
            r.y = r.turn_cy + ctx.sn * px + ctx.cs * py;
            const double dx = ctx.cs * r.dir_x - ctx.sn * r.dir_y;
            r.dir_y = ctx.sn * r.dir_x + ctx.cs * r.dir_y;
            r.dir_x = dx;
            r.swept += ctx.dphi;
            const bool past_mid = r.swept >= ctx.arc_span / 2;
            const bool back_out =
                round13(r.x * r.x + r.y * r.y - ctx.c.d_r * ctx.c.d_r) >= 0;
            if (r.swept >= ctx.arc_span || (past_mid && back_out)) {
                r.phase = Phase::exit_lane;
                r.exit_aligned = false;
            }
            break;
        }
        case Phase::exit_lane: {
            const LaneGeometry& g = ctx.lanes[r.lane];
            if (!r.exit_aligned) {
                // exit-lane stabilisation: turning speed gamma - beta
                double err =
                    std::remainder(std::atan2(r.dir_y, r.dir_x) - g.exit_angle, 2 * kPi);
                if (std::fabs(err) < 1e-12) {
                    r.dir_x = g.out_x;
                    r.dir_y = g.out_y;
                    r.exit_aligned = true;
                } else {
                    const double gamma = g.exit_angle + err * (1.0 - dt);
                    r.dir_x = std::cos(gamma);
                    r.dir_y = std::sin(gamma);
                }
            }
            r.x += p.v * dt * r.dir_x;
            r.y += p.v * dt * r.dir_y;
            break;
        }
    }
}

}  // namespace

void step(std::vector<RobotState>& world, const SimConfig& cfg) {
    const auto& p = cfg.params;
    const double dt = cfg.dt;

    if (cfg.strategy != Strategy::touchrun) {
        for (long long i = 0; i < static_cast<long long>(world.size()); ++i) {
            world[i].x += p.v * dt * world[i].dir_x;
            world[i].y += p.v * dt * world[i].dir_y;
        }
        return;
    }

    const TouchContext ctx = make_touch_context(cfg);
    for (long long i = 0; i < static_cast<long long>(world.size()); ++i)
        step_touchrun_robot(world[i], ctx, p, dt);
}

namespace {

// Hot per-robot state kept as flat arrays; the audit and motion loops are
// memory-bound at this scale.
struct Hot {
    std::vector<double> px, py, dx, dy;
    std::vector<double> swept, turn_cx, turn_cy;
    std::vector<double> arrive_t;
    std::vector<signed char> phase;    // 0 entry, 1 arc, 2 exit, 3 exit aligned
    std::vector<signed char> arrived;
    std::vector<int> lane;
};

}  // namespace

RunResult run(const SimConfig& cfg, std::ostream* trace) {
    const auto world0 = place_initial(cfg);
    const auto& p = cfg.params;
    const int n = static_cast<int>(world0.size());
    const double dt = cfg.dt;
    const double threshold = p.d - p.v * dt;
    const bool straight = cfg.strategy != Strategy::touchrun;
    const bool audit_exempts_arrived = straight;

    Hot h;
    h.px.resize(n); h.py.resize(n); h.dx.resize(n); h.dy.resize(n);
    h.swept.assign(n, 0.0); h.turn_cx.assign(n, 0.0); h.turn_cy.assign(n, 0.0);
    h.arrive_t.assign(n, -1.0);
    h.phase.assign(n, 0);
    h.arrived.assign(n, 0);
    h.lane.resize(n);
    for (int i = 0; i < n; ++i) {
        h.px[i] = world0[i].x;
        h.py[i] = world0[i].y;
        h.dx[i] = world0[i].dir_x;
        h.dy[i] = world0[i].dir_y;
        h.lane[i] = world0[i].lane;
    }

    double spacing = p.d;
    switch (cfg.strategy) {
        case Strategy::compact: spacing = compact::layout(p).d_e; break;
        case Strategy::touchrun: spacing = touchrun::build_config(cfg.k, p).d_o; break;
        default: break;
    }
    double start_extent = 0;
    for (int i = 0; i < n; ++i) start_extent = std::max(start_extent, std::hypot(h.px[i], h.py[i]));
    const double guard_t = 10.0 * (n * spacing + start_extent + p.s + p.d) / p.v;

    // Straight strategies advance in closed form from the start position so
    // 200k-step runs keep sample-exact arrival times.
    std::vector<double> start_x, crossing_x;
    if (straight) {
        start_x = h.px;
        crossing_x.reserve(n);
        for (int i = 0; i < n; ++i)
            crossing_x.push_back(std::sqrt(std::max(0.0, (p.s - h.py[i]) * (p.s + h.py[i]))));
    }
    TouchContext touch{};
    std::vector<int> lane_order, lane_head, lane_end, arc_list, stab_list, stab_new;
    if (!straight) {
        touch = make_touch_context(cfg);
        lane_head.assign(touch.c.k, 0);
        lane_end.assign(touch.c.k, 0);
        std::vector<std::vector<int>> per_lane(touch.c.k);
        for (int i = 0; i < n; ++i) per_lane[h.lane[i]].push_back(i);
        int offset = 0;
        for (int lane = 0; lane < touch.c.k; ++lane) {
            lane_head[lane] = offset;
            for (int i : per_lane[lane]) lane_order.push_back(i);
            offset += static_cast<int>(per_lane[lane].size());
            lane_end[lane] = offset;
        }
    }
    const double s2 = p.s * p.s;
    const double dr2 = straight ? 0.0 : touch.c.d_r * touch.c.d_r;

    AuditGrid grid;
    grid.init(world0, p.d);
    const long long refile_every = std::max<long long>(
        1, static_cast<long long>(0.45 * p.d / (std::numbers::sqrt2 * p.v * dt)));

    // audit ring: robot i re-checks once its scheduled step comes up
    constexpr long long kRingSize = 8192;
    std::vector<std::vector<int>> due(kRingSize);
    for (int i = 0; i < n; ++i) due[0].push_back(i);
    std::vector<long long> reschedule;

    std::vector<double> raw_arrivals;
    raw_arrivals.reserve(n);
    int arrived_total = 0;
    double min_dist = std::numeric_limits<double>::infinity();

    const double two_v_dt = 2.0 * p.v * dt;

    long long step_idx = 0;
    while (true) {
        const double t = step_idx * dt;
        if (t > guard_t)
            throw std::runtime_error("simulator: run exceeded the termination guard at t=" +
                                     std::to_string(t) + " with " +
                                     std::to_string(arrived_total) + "/" + std::to_string(n) +
                                     " arrivals");

        // move to t and detect arrivals; a robot has arrived once it sits
        // inside the disc or its path has already touched it (thin grazing
        // chords can be crossed entirely between two samples)
        int new_arrivals = 0;
        if (straight) {
            if (step_idx > 0)
                for (int i = 0; i < n; ++i) h.px[i] = start_x[i] - p.v * t;
            for (int i = 0; i < n; ++i) {
                if (!h.arrived[i] && le_rounded(h.px[i], crossing_x[i])) {
                    h.arrived[i] = 1;
                    h.arrive_t[i] = t;
                    ++new_arrivals;
                }
            }
        } else {
            // Bulk: every phase moves linearly along its current direction;
            // the few robots on arcs or stabilising their exit heading are
            // fixed up afterwards from their pre-step position.
            if (step_idx > 0) {
                const double c1 = p.v * dt;
                for (int i = 0; i < n; ++i) {
                    h.px[i] += c1 * h.dx[i];
                    h.py[i] += c1 * h.dy[i];
                }
                for (size_t a = 0; a < arc_list.size();) {
                    const int i = arc_list[a];
                    const double ox = h.px[i] - c1 * h.dx[i], oy = h.py[i] - c1 * h.dy[i];
                    const double ax = ox - h.turn_cx[i], ay = oy - h.turn_cy[i];
                    h.px[i] = h.turn_cx[i] + touch.cs * ax - touch.sn * ay;
                    h.py[i] = h.turn_cy[i] + touch.sn * ax + touch.cs * ay;
                    const double ndx = touch.cs * h.dx[i] - touch.sn * h.dy[i];
                    h.dy[i] = touch.sn * h.dx[i] + touch.cs * h.dy[i];
                    h.dx[i] = ndx;
                    h.swept[i] += touch.dphi;
                    const double r2 = h.px[i] * h.px[i] + h.py[i] * h.py[i];
                    const bool past_mid = h.swept[i] >= touch.arc_span / 2;
                    if (!h.arrived[i] && (le_rounded(r2, s2) || past_mid)) {
                        h.arrived[i] = 1;
                        h.arrive_t[i] = t;
                        ++new_arrivals;
                    }
                    if (h.swept[i] >= touch.arc_span || (past_mid && ge_rounded(r2, dr2))) {
                        h.phase[i] = 2;
                        if (!h.arrived[i]) {
                            h.arrived[i] = 1;
                            h.arrive_t[i] = t;
                            ++new_arrivals;
                        }
                        stab_new.push_back(i);
                        arc_list[a] = arc_list.back();
                        arc_list.pop_back();
                    } else {
                        ++a;
                    }
                }
                for (size_t a = 0; a < stab_list.size();) {
                    const int i = stab_list[a];
                    const LaneGeometry& g = touch.lanes[h.lane[i]];
                    const double ox = h.px[i] - c1 * h.dx[i], oy = h.py[i] - c1 * h.dy[i];
                    double err =
                        std::remainder(std::atan2(h.dy[i], h.dx[i]) - g.exit_angle, 2 * kPi);
                    bool aligned = false;
                    if (std::fabs(err) < 1e-12) {
                        h.dx[i] = g.out_x;
                        h.dy[i] = g.out_y;
                        h.phase[i] = 3;
                        aligned = true;
                    } else {
                        const double gamma = g.exit_angle + err * (1.0 - dt);
                        h.dx[i] = std::cos(gamma);
                        h.dy[i] = std::sin(gamma);
                    }
                    h.px[i] = ox + c1 * h.dx[i];
                    h.py[i] = oy + c1 * h.dy[i];
                    if (aligned) {
                        stab_list[a] = stab_list.back();
                        stab_list.pop_back();
                    } else {
                        ++a;
                    }
                }
                // robots that left the arc this step start stabilising next step
                stab_list.insert(stab_list.end(), stab_new.begin(), stab_new.end());
                stab_new.clear();
            }
            // Only a lane's leading entry robot can reach the turn distance;
            // followers trail it by d_o along the same inbound line.
            for (int lane = 0; lane < touch.c.k; ++lane) {
                const int head = lane_head[lane];
                if (head >= lane_end[lane]) continue;
                const int i = lane_order[head];
                const double r2 = h.px[i] * h.px[i] + h.py[i] * h.py[i];
                if (le_rounded(r2, dr2)) {
                    h.phase[i] = 1;
                    h.swept[i] = 0;
                    // left turn: centre 90 degrees left of the heading
                    h.turn_cx[i] = h.px[i] - touch.c.r * h.dy[i];
                    h.turn_cy[i] = h.py[i] + touch.c.r * h.dx[i];
                    arc_list.push_back(i);
                    ++lane_head[lane];
                }
            }
        }
        if (new_arrivals > 0) {
            for (int i = 0; i < n; ++i)
                if (h.arrived[i] && h.arrive_t[i] == t) raw_arrivals.push_back(t);
            arrived_total += new_arrivals;
        }
        if (!straight && step_idx % refile_every == 0 && step_idx > 0) grid.rebuild(h.px, h.py);

        if (trace) {
            for (int i = 0; i < n; ++i) {
                const char* ph = h.phase[i] == 0   ? "entry"
                                 : h.phase[i] == 1 ? "arc"
                                                   : "exit";
                (*trace) << t << ',' << i << ',' << h.px[i] << ',' << h.py[i] << ',' << ph
                         << '\n';
            }
        }

        // Pairwise audit. A pair closes at most 2 v dt per step; while both
        // robots keep their current velocity (entry queues, aligned exit
        // lanes) it closes at |v_i - v_j| dt, and an entry robot cannot start
        // turning before its distance to the centre has shrunk to d_r.
        auto& checks = due[step_idx % kRingSize];
        reschedule.resize(checks.size());
        for (size_t q = 0; q < checks.size(); ++q) {
            const int i = checks[q];
            const long long ix = static_cast<long long>(std::floor(h.px[i] / grid.cell));
            const long long iy = static_cast<long long>(std::floor(h.py[i] / grid.cell));
            auto stability = [&](int r) -> double {  // steps with frozen velocity
                if (straight) return 1e18;
                if (h.phase[r] == 3) return 1e18;
                if (h.phase[r] != 0) return 0.0;
                return std::max(0.0,
                                (std::hypot(h.px[r], h.py[r]) - touch.c.d_r) / (p.v * dt));
            };
            const double stab_i = stability(i);

            // While both robots hold their velocity the pair distance is the
            // exact quadratic |dp + k dv|; past the freeze window only the
            // 2 v dt per-step bound remains.
            auto pair_safe_steps = [&](int j, double dist) -> double {
                const double slack = dist - threshold;
                if (slack <= 0) return 0.0;
                const double t_pc = std::min(stab_i, stability(j));
                double safe = slack / two_v_dt;
                if (t_pc >= 1.0) {
                    const double dpx = h.px[j] - h.px[i], dpy = h.py[j] - h.py[i];
                    const double dvx = p.v * dt * (h.dx[j] - h.dx[i]);
                    const double dvy = p.v * dt * (h.dy[j] - h.dy[i]);
                    const double a = dvx * dvx + dvy * dvy;
                    const double b = dpx * dvx + dpy * dvy;
                    const double c2 = dpx * dpx + dpy * dpy - threshold * threshold;
                    double freeze_ok = t_pc;
                    if (a > 1e-30) {
                        const double disc = b * b - a * c2;
                        if (disc >= 0 && b < 0) {
                            const double k_hit = (-b - std::sqrt(disc)) / a;
                            freeze_ok = std::min(freeze_ok, std::max(0.0, k_hit - 1.0));
                        }
                    }
                    const double ex = dpx + freeze_ok * dvx, ey = dpy + freeze_ok * dvy;
                    const double dist_end = std::hypot(ex, ey);
                    safe = std::max(safe,
                                    freeze_ok + std::max(0.0, dist_end - threshold) / two_v_dt);
                }
                return safe;
            };

            double worst_steps = 1e18;
            for (long long cx = ix - 1; cx <= ix + 1; ++cx) {
                for (long long cy = iy - 1; cy <= iy + 1; ++cy) {
                    const size_t s = grid.slot_of(AuditGrid::pack(cx, cy));
                    if (grid.keys[s] == -1) continue;
                    for (int j = grid.heads[s]; j != -1; j = grid.next[j]) {
                        if (j == i) continue;
                        const double dist = std::hypot(h.px[i] - h.px[j], h.py[i] - h.py[j]);
                        const bool exempt = audit_exempts_arrived &&
                                            (h.arrived[i] != h.arrived[j]);
                        if (!exempt) min_dist = std::min(min_dist, dist);
                        worst_steps = std::min(worst_steps, pair_safe_steps(j, dist));
                    }
                }
            }
            // Robots outside the inspected block still bound the horizon: a
            // second ring extends it, anything outside 5x5 is two full cells
            // away less the filing drift.
            const double near_cap = (3.0 * p.d - 0.6 * p.d - threshold) / two_v_dt;
            if (worst_steps > near_cap) {
                double far_steps = (6.0 * p.d - 0.6 * p.d - threshold) / two_v_dt;
                for (long long cx = ix - 2; cx <= ix + 2; ++cx) {
                    for (long long cy = iy - 2; cy <= iy + 2; ++cy) {
                        if (std::llabs(cx - ix) < 2 && std::llabs(cy - iy) < 2) continue;
                        const size_t s = grid.slot_of(AuditGrid::pack(cx, cy));
                        if (grid.keys[s] == -1) continue;
                        for (int j = grid.heads[s]; j != -1; j = grid.next[j]) {
                            if (j == i) continue;
                            const double dist =
                                std::hypot(h.px[i] - h.px[j], h.py[i] - h.py[j]);
                            far_steps = std::min(far_steps, pair_safe_steps(j, dist));
                        }
                    }
                }
                worst_steps = std::min(worst_steps, far_steps);
            }
            const long long skip = std::clamp<long long>(
                static_cast<long long>(worst_steps), 1, kRingSize - 2);
            reschedule[q] = (step_idx + skip) % kRingSize;
        }
        // straight strategies translate rigidly, so the t = 0 audit already
        // bounds every later instant
        if (!straight)
            for (size_t q = 0; q < checks.size(); ++q) due[reschedule[q]].push_back(checks[q]);
        checks.clear();

        if (arrived_total == n) break;
        ++step_idx;
    }

    // normalize to the first arrival and quantize to the sampling grid
    double t0 = std::numeric_limits<double>::infinity();
    for (double ta : raw_arrivals) t0 = std::min(t0, ta);
    RunResult res;
    res.arrival_times.reserve(raw_arrivals.size());
    for (double ta : raw_arrivals)
        res.arrival_times.push_back(round13(std::round((ta - t0) / dt) * dt));
    std::sort(res.arrival_times.begin(), res.arrival_times.end());
    res.min_pair_distance = min_dist;
    res.distance_ok = round13(min_dist - threshold) >= 0;
    res.steps = step_idx;
    return res;
}

}  // namespace swarm::sim
