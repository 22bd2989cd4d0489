#pragma once

#include <cmath>
#include <numbers>

namespace dockplan {

inline constexpr double kPi = std::numbers::pi;

inline double deg2rad(double deg) { return deg * (kPi / 180.0); }
inline double rad2deg(double rad) { return rad * (180.0 / kPi); }

/// Wraps an angle into (-pi, pi].
inline double wrap_pi(double angle) {
  double a = std::fmod(angle + kPi, 2.0 * kPi);
  if (a <= 0.0) a += 2.0 * kPi;
  return a - kPi;
}

/// Absolute angular separation, always in [0, pi].
inline double angular_distance(double a, double b) {
  return std::abs(wrap_pi(a - b));
}

}  // namespace dockplan
