#pragma once

#include <stdexcept>
#include <vector>

#include "dockplan/refcurve.hpp"
#include "dockplan/types.hpp"

namespace dockplan {

/// Speed factor d(tau)/dt as a function of the normalized argument:
///
///   lambda(tau_bar) = 1 + 4 lambda_m tau_bar (1 - tau_bar)
///
/// A single shape parameter bends the speed profile while both endpoints
/// stay pinned at 1, so boundary time derivatives keep their tau_f scaling.
/// Positive on [0, 1] requires lambda_m > -1.
struct SpeedFactorProfile {
  double lambda_m = 0.0;

  double value(double tau_bar) const {
    return 1.0 + 4.0 * lambda_m * tau_bar * (1.0 - tau_bar);
  }
};

/// Complete vehicle state at one sampled instant.
struct TrajectoryNode {
  double t = 0.0;
  double tau_bar = 0.0;
  NedVector position;
  double yaw = 0.0;
  double pitch = 0.0;
  NedVector ground_velocity;
  BodyVelocity body;
  double yaw_rate = 0.0;
  double pitch_rate = 0.0;
  double course_angle = 0.0;       // direction of ground velocity, horizontal plane
  double flight_path_angle = 0.0;  // equals pitch for the roll-free model
  double speed = 0.0;              // |ground_velocity|
};

/// Trajectory sampled on the node grid; node times strictly increase from 0
/// to t_f.
struct SampledTrajectory {
  std::vector<TrajectoryNode> nodes;
  double t_f = 0.0;

  /// Sum of node-to-node Euclidean distances.
  double path_length() const;
};

/// Raised when inverse dynamics is undefined at a node (vertical path
/// segment or vanishing horizontal ground speed). Carries the node index.
class SamplingError : public std::domain_error {
 public:
  SamplingError(const std::string& what, int node) : std::domain_error(what), node_index(node) {}
  int node_index = -1;
};

struct TimeSample {
  double tau_bar = 0.0;
  double t = 0.0;
};

/// Virtual-to-time mapping t(tau_bar) = tau_f * integral_0^tau_bar d(xi)/lambda(xi),
/// computed by composite trapezoidal quadrature on a refined uniform grid
/// whose points include the node grid. With lambda_m = 0 the mapping is the
/// identity t = tau_f * tau_bar, exactly.
std::vector<TimeSample> time_map(const SpeedFactorProfile& profile, double tau_f,
                                 int node_count);

/// Pitch (= flight path angle) from virtual-domain slope components.
/// Scale invariant; throws for a vertical segment (dx = dy = 0).
double pitch_from_slope(double dx, double dy, double dz);

/// Inverse of the ground-velocity kinematics: body velocity recovered from
/// ground velocity, attitude and current.
BodyVelocity body_velocity_from_ground(const NedVector& ground, const Attitude& att,
                                       const CurrentField& current);

/// Course angle from the resultant ground-speed components built out of the
/// water-relative speed, the water-velocity direction angles and the current.
/// Throws when both horizontal components vanish (course undefined).
double course_angle(double speed_water, const Attitude& att, const CurrentField& current);

/// Samples the full state history along a reference curve: positions and
/// ground velocities from the curve and speed factor, pitch from the path
/// slope, body velocities by frame inversion, rates and course angle.
/// Pitch rate uses central differences of pitch over t (one-sided at the
/// ends); everything else is analytic.
SampledTrajectory sample_trajectory(const ReferenceCurve& curve,
                                    const SpeedFactorProfile& profile,
                                    const Scenario& scenario, int node_count);

}  // namespace dockplan
