#pragma once

#include <cmath>

namespace hexisr {

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
inline double linear_to_db(double lin) { return 10.0 * std::log10(lin); }

/// Pathloss reference distance: `a` is the loss at 1 km.
inline constexpr double kPathlossReferenceMeters = 1000.0;

}  // namespace hexisr
