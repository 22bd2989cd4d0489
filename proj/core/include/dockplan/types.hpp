#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "dockplan/angles.hpp"

namespace dockplan {

/// Thrown when a scenario or domain type violates one of its invariants.
/// The message names the offending field/invariant.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Position or velocity in the North-East-Down geographic frame.
/// Down is positive depth.
struct NedVector {
  double north = 0.0;
  double east = 0.0;
  double down = 0.0;

  double norm() const { return std::sqrt(north * north + east * east + down * down); }

  bool is_finite() const {
    return std::isfinite(north) && std::isfinite(east) && std::isfinite(down);
  }

  NedVector operator+(const NedVector& o) const { return {north + o.north, east + o.east, down + o.down}; }
  NedVector operator-(const NedVector& o) const { return {north - o.north, east - o.east, down - o.down}; }
  NedVector operator-() const { return {-north, -east, -down}; }
  NedVector operator*(double s) const { return {north * s, east * s, down * s}; }
};

inline NedVector operator*(double s, const NedVector& v) { return v * s; }

inline double distance(const NedVector& a, const NedVector& b) { return (a - b).norm(); }

/// Roll-free vehicle orientation. Yaw is normalized to (-pi, pi] on
/// construction; pitch must lie strictly inside (-pi/2, pi/2) because the
/// roll-free rotation matrix is singular at +-pi/2.
struct Attitude {
  double yaw = 0.0;
  double pitch = 0.0;

  Attitude() = default;
  Attitude(double yaw_rad, double pitch_rad) : yaw(wrap_pi(yaw_rad)), pitch(pitch_rad) {
    if (!(std::abs(pitch_rad) < kPi / 2.0)) {
      throw std::domain_error("Attitude: pitch must lie strictly inside (-pi/2, pi/2)");
    }
  }
};

/// Translational velocity through the water in the body frame:
/// surge forward, sway starboard, heave down.
struct BodyVelocity {
  double surge = 0.0;
  double sway = 0.0;
  double heave = 0.0;

  double norm() const { return std::sqrt(surge * surge + sway * sway + heave * heave); }
};

/// Horizontal (2D) ocean current: magnitude and direction in the NED frame.
/// The vertical component is identically zero.
struct CurrentField {
  double magnitude = 0.0;   // m/s, >= 0
  double direction = 0.0;   // rad

  double north() const { return magnitude * std::cos(direction); }
  double east() const { return magnitude * std::sin(direction); }
  NedVector ned() const { return {north(), east(), 0.0}; }
};

/// Closed interval bound used for state/rate limits.
struct Interval {
  double min = 0.0;
  double max = 0.0;
};

/// Per-channel state and rate limits. Defaults are REMUS-class magnitudes
/// and are meant to be overridden per scenario.
struct VehicleLimits {
  Interval depth{0.0, 100.0};        // m
  Interval surge{0.0, 2.5};          // m/s
  Interval sway{-0.5, 0.5};          // m/s
  Interval pitch_rate{-0.2, 0.2};    // rad/s
  Interval yaw_rate{-0.3, 0.3};      // rad/s

  static VehicleLimits defaults() { return VehicleLimits{}; }
};

/// Funnel-shaped docking station: pose plus cone geometry. Successful entry
/// requires the approach angles to stay within half the entry cone angle.
struct DockSpec {
  NedVector position;
  double yaw = 0.0;                // rad
  double pitch = 0.0;              // rad
  double cone_length = 1.5;        // m
  double outer_radius = 1.0;       // m
  double inner_radius = 0.25;      // m
  double entry_cone_angle = 0.9272952180016122;  // rad, 2*atan2(R - r, h)
};

/// Spherical keep-out region.
struct NoFlyZone {
  NedVector center;
  double radius = 1.0;
};

/// Boundary state at one trajectory end. Velocity/acceleration are ground
/// referenced (NED). Boundary jerk is not stored here; it is a free variable
/// owned by the planner's decision vector.
struct EndpointConditions {
  NedVector position;
  NedVector velocity;
  NedVector acceleration;
  double yaw = 0.0;
  double yaw_rate = 0.0;
  double yaw_accel = 0.0;
};

struct BoundaryConditions {
  EndpointConditions initial;
  EndpointConditions terminal;
};

/// Penalty weight per violation channel.
struct PenaltyWeights {
  double depth = 100.0;
  double surge = 100.0;
  double sway = 100.0;
  double pitch_rate = 100.0;
  double yaw_rate = 100.0;
  double approach_horizontal = 100.0;
  double approach_vertical = 100.0;
  double nofly = 100.0;

  static PenaltyWeights defaults() { return PenaltyWeights{}; }
};

/// Simplex solver configuration (scenario `solver` section / CLI flags).
struct SolverOptions {
  int max_evaluations = 5000;
  double tolerance = 1e-6;       // relative simplex cost spread at convergence
  double tau_scale = 0.1;        // initial simplex: relative tau_f perturbation
  double jerk_scale = 0.05;      // initial simplex: absolute jerk perturbation, m/s^3
  double lambda_scale = 0.2;     // initial simplex: absolute lambda_m perturbation
  int threads = 0;               // Monte Carlo workers; 0 = hardware concurrency
};

/// Complete planning problem: boundary poses and speeds, dock, environment,
/// limits, penalty weights and discretization. Immutable by convention once
/// validate() has run; treat instances as values.
///
/// The boundary conditions used by the curve solver are derived from the
/// pose-level fields: the boundary ground velocity is the water speed along
/// the boundary heading plus the current. Perturbing a heading therefore
/// rotates the corresponding boundary velocity as a rigid vehicle would.
struct Scenario {
  // Initial pose and boundary speeds.
  NedVector start_position;
  double start_yaw = 0.0;               // rad
  double start_pitch = 0.0;             // rad
  double initial_water_speed = 1.0;     // m/s along the initial heading
  double final_water_speed = 1.0;       // m/s along the dock axis at entry
  NedVector initial_acceleration;
  NedVector final_acceleration;
  double initial_yaw_rate = 0.0;
  double initial_yaw_accel = 0.0;
  double final_yaw_rate = 0.0;
  double final_yaw_accel = 0.0;

  DockSpec dock;
  CurrentField current;
  std::vector<NoFlyZone> zones;
  VehicleLimits limits = VehicleLimits::defaults();
  PenaltyWeights weights = PenaltyWeights::defaults();

  int node_count = 100;
  double terminal_window = 20.0;        // m; approach-angle penalties apply within
  SolverOptions solver;

  /// Derived by validate(); final position/heading equal the dock pose.
  BoundaryConditions boundary;

  /// Checks every invariant (throwing ValidationError naming the violated
  /// field) and derives `boundary` from the pose-level fields.
  void validate();
};

}  // namespace dockplan
