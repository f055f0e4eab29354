#pragma once

#include <algorithm>
#include <cmath>

namespace cascade_noise {

// Relative difference with a unit floor: |a-b| / max(|a|, |b|, 1).
// Equality tolerances throughout the library are stated against this.
inline double relative_difference(double a, double b) {
    return std::fabs(a - b) / std::max({std::fabs(a), std::fabs(b), 1.0});
}

}  // namespace cascade_noise
