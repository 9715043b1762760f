// Physical constants shared across the library (SI units).
#pragma once

#include <numbers>

namespace cavitylz {

inline constexpr double speed_of_light = 299792458.0;     // m/s, exact
inline constexpr double hbar = 1.054571817e-34;           // J s (CODATA 2018)
inline constexpr double pi = std::numbers::pi_v<double>;

}  // namespace cavitylz
