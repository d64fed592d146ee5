#pragma once

#include "core_model.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace swarm::sim {

enum class Strategy { compact, parallel, hex, touchrun };

Strategy strategy_from_name(const std::string& name);
const char* strategy_name(Strategy s);

struct SimConfig {
    Strategy strategy;
    SwarmParams params;
    int n_robots;
    double dt = 0.1;
    double theta = 0.0;                      // hex packing angle
    int k = 0;                               // touch-and-run lane count
    std::optional<double> omega_max;         // turning-rate cap
};

enum class Phase { entry, arc, exit_lane };

struct RobotState {
    double x, y;
    double dir_x, dir_y;  // unit velocity direction
    int lane;
    Phase phase = Phase::entry;
    std::optional<double> arrived_at;

    // touch-and-run internals
    double turn_cx = 0, turn_cy = 0;  // instantaneous turn centre
    double swept = 0;                 // angle swept on the arc
    bool exit_aligned = false;        // exit heading settled on the lane axis

    double heading() const;
};

struct RunResult {
    std::vector<double> arrival_times;  // normalized to first arrival, quantized to dt
    double min_pair_distance;           // min audited distance over all sampled instants
    bool distance_ok;                   // min >= d - v dt
    long long steps;
};

// Robots seeded on their strategy's start layout; the earliest robot touches
// the target at the very first sample.
std::vector<RobotState> place_initial(const SimConfig& cfg);

// Advances every robot by dt. Touch-and-run robots switch entry->arc when the
// sampled distance to the centre crosses d_r, sweep the arc at omega = v/r,
// and stabilise onto the exit lane with turning speed gamma - beta.
void step(std::vector<RobotState>& world, const SimConfig& cfg);

// Simulates until every robot has arrived. Arrival is detected at sample
// instants only, so measured times carry error of at most dt. The pairwise
// distance audit runs at every sampled instant; for the straight-lane
// strategies pairs with exactly one arrived robot are exempt (arrived robots
// keep moving on their exit course), touch-and-run audits everything.
RunResult run(const SimConfig& cfg, std::ostream* trace = nullptr);

}  // namespace swarm::sim
