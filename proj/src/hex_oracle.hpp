#pragma once

#include "core_model.hpp"
#include "hex_packing.hpp"

#include <vector>

namespace swarm::oracle {

struct LatticePoint {
    long long xh, yh;  // integer hex coordinates
    double x, y;       // plane coordinates
};

// Brute-force ground truth for the hex closed forms: every lattice point of
// the corridor that reaches the target within T. Membership is tested
// directly against the rectangle/semicircle geometry with the shared
// 13-decimal rounding, so boundary robots agree with the closed form.
std::vector<LatticePoint> enumerate_region(double T, const hex::HexConfig& cfg,
                                           const SwarmParams& p);

long long count(double T, const hex::HexConfig& cfg, const SwarmParams& p);

// Same enumeration against an arbitrary anchor and raw angle; used by the
// periodicity and translation-invariance checks. theta is not reduced
// modulo pi/3 here.
std::vector<LatticePoint> enumerate_region_at(double T, double theta, const SwarmParams& p,
                                              double x0, double y0);

}  // namespace swarm::oracle
