#pragma once

#include "core_model.hpp"

#include <array>
#include <optional>
#include <utility>

namespace swarm::hex {

// Packing angle theta in [0, pi/3); the lattice repeats with period pi/3.
// psi = pi/3 - theta is stored alongside because the rectangle-counting
// formulas are expressed in it.
struct HexConfig {
    double theta;
    double psi;

    explicit HexConfig(double theta);
};

// Lattice <-> plane mapping: plane = origin + Rot(rotation) * H * (x_h, y_h)
// with H columns (d, 0) and (-d/2, sqrt(3)d/2).
struct HexFrame {
    std::array<std::array<double, 2>, 2> forward;  // Rot(rotation) * H
    std::array<std::array<double, 2>, 2> inverse;
    double rotation;
    double origin_x, origin_y;

    std::pair<double, double> to_plane(long long xh, long long yh) const;
    std::pair<double, double> to_hex(double x, double y) const;
};

// Frame of the physical lattice: a robot at the origin has a neighbour at
// angle theta, anchor at (x0, y0).
HexFrame lattice_frame(const HexConfig& cfg, double d, double x0, double y0);

// First-robot anchor. w = s so the anchor sits on the target boundary; all
// counts are invariant to this choice.
inline double anchor_x(const SwarmParams& p) { return p.s; }
inline double anchor_y(const SwarmParams&) { return 0.0; }

// Every intermediate quantity of one throughput evaluation.
struct HexCountBreakdown {
    long long n_l_minus = 0, n_l_plus = 0;  // lane-line counts
    long long k_prime = 0;                  // right-side crossing threshold
    long long rect_count = 0;               // N_R
    long long semi_count = 0;               // N_S
    double last_x = 0, last_y = 0;          // last robot in the rectangle
    double c_x = 0;                         // semicircle centre x
    double c_rot_x = 0, c_rot_y = 0;        // centre after the -theta rotation
    long long col_lo = 0, col_hi = 0;       // semicircle column bounds B, U
};

// (2/sqrt(3)) (2s/d + 1) v/d; requires 0 < d <= 2s.
double upper_bound_asymptotic(const SwarmParams& p);

// Number of lattice column lines intersecting the counting rectangle, split
// into those left (n_l_minus) and right (n_l_plus) of the anchor line.
// Requires vT > s.
std::pair<long long, long long> lane_line_counts(double T, const HexConfig& cfg,
                                                 const SwarmParams& p);

// Real y_h bounds of rectangle column x_h before ceil/floor.
std::pair<double, double> rect_column_range(long long xh, double T, const HexConfig& cfg,
                                            const SwarmParams& p);

long long count_rectangle(double T, const HexConfig& cfg, const SwarmParams& p);

// Rectangle robot minimising |c_x - x| + |y0 - y|; (x0, y0) when vT <= s or
// the rectangle holds no robot.
std::pair<double, double> last_robot_in_rectangle(double T, const HexConfig& cfg,
                                                  const SwarmParams& p);

// Column bounds B, U of the trailing semicircle.
std::pair<long long, long long> semicircle_bounds(double T, const HexConfig& cfg,
                                                  const SwarmParams& p,
                                                  std::pair<double, double> last);

// Real y_h bounds of semicircle column x_h; empty when the column misses the
// circle.
std::optional<std::pair<double, double>> semicircle_column_range(
    long long xh, double T, const HexConfig& cfg, const SwarmParams& p,
    std::pair<double, double> last);

long long count_semicircle(double T, const HexConfig& cfg, const SwarmParams& p);

long long count_total(double T, const HexConfig& cfg, const SwarmParams& p);

// (N_R + N_S - 1) / T.
double throughput_at(double T, const HexConfig& cfg, const SwarmParams& p);

// Open-below, closed-above interval containing lim f_h(T, theta).
std::pair<double, double> asymptotic_bounds(const HexConfig& cfg, const SwarmParams& p);

HexCountBreakdown count_breakdown(double T, const HexConfig& cfg, const SwarmParams& p);

}  // namespace swarm::hex
