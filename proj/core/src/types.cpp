#include "dockplan/types.hpp"

#include <cmath>

namespace dockplan {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw ValidationError(what);
}

void require_finite(const NedVector& v, const char* what) {
  require(v.is_finite(), what);
}

void require_interval(const Interval& iv, const char* what) {
  require(std::isfinite(iv.min) && std::isfinite(iv.max) && iv.min < iv.max, what);
}

/// Unit vector of the velocity direction implied by a (yaw, pitch) pose.
NedVector pose_direction(double yaw, double pitch) {
  return {std::cos(pitch) * std::cos(yaw), std::cos(pitch) * std::sin(yaw), -std::sin(pitch)};
}

}  // namespace

void Scenario::validate() {
  require_finite(start_position, "start_position must be finite");
  require(std::isfinite(start_yaw), "start_yaw must be finite");
  require(std::isfinite(start_pitch) && std::abs(start_pitch) < kPi / 2.0,
          "start_pitch must lie strictly inside (-pi/2, pi/2)");

  require_finite(dock.position, "dock.position must be finite");
  require(std::isfinite(dock.yaw), "dock.yaw must be finite");
  require(std::isfinite(dock.pitch) && std::abs(dock.pitch) < kPi / 2.0,
          "dock.pitch must lie strictly inside (-pi/2, pi/2)");
  require(dock.cone_length > 0.0, "dock.cone_length must be positive");
  require(dock.outer_radius > dock.inner_radius && dock.inner_radius > 0.0,
          "dock radii must satisfy outer_radius > inner_radius > 0");
  require(dock.entry_cone_angle > 0.0 && dock.entry_cone_angle < kPi,
          "dock.entry_cone_angle must lie in (0, pi)");

  require(std::isfinite(current.magnitude) && current.magnitude >= 0.0,
          "current.magnitude must be nonnegative");
  require(std::isfinite(current.direction), "current.direction must be finite");

  for (const auto& zone : zones) {
    require_finite(zone.center, "zone.center must be finite");
    require(std::isfinite(zone.radius) && zone.radius > 0.0, "zone.radius must be positive");
  }

  require_interval(limits.depth, "limits.depth must satisfy min < max");
  require_interval(limits.surge, "limits.surge must satisfy min < max");
  require_interval(limits.sway, "limits.sway must satisfy min < max");
  require_interval(limits.pitch_rate, "limits.pitch_rate must satisfy min < max");
  require_interval(limits.yaw_rate, "limits.yaw_rate must satisfy min < max");

  const double* ws[] = {&weights.depth,      &weights.surge,
                        &weights.sway,       &weights.pitch_rate,
                        &weights.yaw_rate,   &weights.approach_horizontal,
                        &weights.approach_vertical, &weights.nofly};
  for (const double* w : ws) {
    require(std::isfinite(*w) && *w >= 0.0, "weights must be nonnegative");
  }

  require(node_count >= 10, "node_count must be at least 10");
  require(std::isfinite(terminal_window) && terminal_window > 0.0,
          "terminal_window must be positive");

  require(std::isfinite(initial_water_speed) && initial_water_speed >= 0.0,
          "initial_water_speed must be nonnegative");
  require(std::isfinite(final_water_speed) && final_water_speed >= 0.0,
          "final_water_speed must be nonnegative");
  require_finite(initial_acceleration, "initial_acceleration must be finite");
  require_finite(final_acceleration, "final_acceleration must be finite");
  require(std::isfinite(initial_yaw_rate) && std::isfinite(initial_yaw_accel) &&
              std::isfinite(final_yaw_rate) && std::isfinite(final_yaw_accel),
          "yaw boundary rates/accelerations must be finite");

  require(solver.max_evaluations > 0, "solver.max_evaluations must be positive");
  require(std::isfinite(solver.tolerance) && solver.tolerance > 0.0,
          "solver.tolerance must be positive");
  require(solver.threads >= 0, "solver.threads must be nonnegative");

  boundary.initial.position = start_position;
  boundary.initial.velocity =
      initial_water_speed * pose_direction(start_yaw, start_pitch) + current.ned();
  boundary.initial.acceleration = initial_acceleration;
  boundary.initial.yaw = start_yaw;
  boundary.initial.yaw_rate = initial_yaw_rate;
  boundary.initial.yaw_accel = initial_yaw_accel;

  boundary.terminal.position = dock.position;
  boundary.terminal.velocity =
      final_water_speed * pose_direction(dock.yaw, dock.pitch) + current.ned();
  boundary.terminal.acceleration = final_acceleration;
  boundary.terminal.yaw = dock.yaw;
  boundary.terminal.yaw_rate = final_yaw_rate;
  boundary.terminal.yaw_accel = final_yaw_accel;

  require(boundary.initial.velocity.norm() > 0.0, "initial boundary velocity must be nonzero");
  require(boundary.terminal.velocity.norm() > 0.0, "terminal boundary velocity must be nonzero");
}

}  // namespace dockplan
