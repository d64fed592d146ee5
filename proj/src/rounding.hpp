#pragma once

#include <cmath>

namespace swarm {

// Shared rounding policy: round to 13 decimal places before any floor/ceil
// or boundary comparison, so float noise in divisions and trig does not flip
// integer counts (e.g. 9.6/1.6 = 5.999999999999999 must floor to 6).
inline double round13(double x) {
    return std::round(x * 1e13) / 1e13;
}

inline long long floor13(double x) {
    return static_cast<long long>(std::floor(round13(x)));
}

inline long long ceil13(double x) {
    return static_cast<long long>(std::ceil(round13(x)));
}

}  // namespace swarm
