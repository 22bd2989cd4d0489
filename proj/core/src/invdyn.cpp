#include "dockplan/invdyn.hpp"

#include <Eigen/Dense>
#include <cmath>

#include "dockplan/frames.hpp"

namespace dockplan {

double SampledTrajectory::path_length() const {
  double length = 0.0;
  for (size_t i = 1; i < nodes.size(); ++i) {
    length += distance(nodes[i].position, nodes[i - 1].position);
  }
  return length;
}

std::vector<TimeSample> time_map(const SpeedFactorProfile& profile, double tau_f,
                                 int node_count) {
  if (!(tau_f > 0.0) || !std::isfinite(tau_f)) {
    throw std::domain_error("time_map: tau_f must be positive and finite");
  }
  if (node_count < 10) {
    throw std::domain_error("time_map: node_count must be at least 10");
  }

  const int intervals = node_count - 1;
  std::vector<TimeSample> samples(static_cast<size_t>(node_count));

  if (profile.lambda_m == 0.0) {
    // Constant unit speed factor: the trapezoid sum telescopes analytically.
    for (int i = 0; i < node_count; ++i) {
      const double tau_bar = static_cast<double>(i) / intervals;
      samples[static_cast<size_t>(i)] = {tau_bar, tau_f * tau_bar};
    }
    return samples;
  }

  // Refine each node interval so the trapezoid error stays well below the
  // 1e-6 relative target for smooth profiles.
  const int substeps = std::max(1, (8192 + intervals - 1) / intervals);
  const double total = static_cast<double>(intervals) * substeps;

  double accum = 0.0;
  double prev_integrand = 1.0 / profile.value(0.0);
  if (!(profile.value(0.0) > 0.0)) {
    throw std::domain_error("time_map: speed factor must be positive on [0, 1]");
  }
  samples[0] = {0.0, 0.0};

  int grid_index = 0;
  for (int i = 1; i < node_count; ++i) {
    for (int s = 0; s < substeps; ++s) {
      ++grid_index;
      const double xi = static_cast<double>(grid_index) / total;
      const double lam = profile.value(xi);
      if (!(lam > 0.0)) {
        throw std::domain_error("time_map: speed factor must be positive on [0, 1]");
      }
      const double integrand = 1.0 / lam;
      accum += 0.5 * (prev_integrand + integrand) / total;
      prev_integrand = integrand;
    }
    const double tau_bar = static_cast<double>(i * substeps) / total;
    samples[static_cast<size_t>(i)] = {tau_bar, tau_f * accum};
  }
  return samples;
}

double pitch_from_slope(double dx, double dy, double dz) {
  const double horizontal = std::sqrt(dx * dx + dy * dy);
  if (horizontal == 0.0) {
    throw std::domain_error("pitch_from_slope: vertical segment, pitch undefined");
  }
  return std::atan2(-dz, horizontal);
}

BodyVelocity body_velocity_from_ground(const NedVector& ground, const Attitude& att,
                                       const CurrentField& current) {
  const Eigen::Matrix3d r = rotation_body_to_ned(att);
  const Eigen::Vector3d water(ground.north - current.north(),
                              ground.east - current.east(), ground.down);
  const Eigen::Vector3d body = r.transpose() * water;
  return {body.x(), body.y(), body.z()};
}

double course_angle(double speed_water, const Attitude& att, const CurrentField& current) {
  const double vrn = speed_water * std::cos(att.pitch) * std::cos(att.yaw) + current.north();
  const double vre = speed_water * std::cos(att.pitch) * std::sin(att.yaw) + current.east();
  if (vrn == 0.0 && vre == 0.0) {
    throw std::domain_error("course_angle: resultant horizontal speed is zero");
  }
  return std::atan2(vre, vrn);
}

namespace {

/// Direction angles (azimuth, inclination) of the water-relative velocity.
/// Feeding these into the resultant-speed decomposition reproduces the
/// ground velocity exactly, keeping the two course formulations consistent.
Attitude water_direction(const Eigen::Vector3d& water) {
  const double horizontal = std::hypot(water.x(), water.y());
  if (horizontal == 0.0) {
    if (water.z() == 0.0) return Attitude{};
    // Purely vertical water velocity: inclination sits at the open end of
    // the attitude domain; nudge inside so the horizontal terms vanish.
    return Attitude(0.0, std::copysign(kPi / 2.0 - 1e-9, -water.z()));
  }
  return Attitude(std::atan2(water.y(), water.x()), std::atan2(-water.z(), horizontal));
}

}  // namespace

SampledTrajectory sample_trajectory(const ReferenceCurve& curve,
                                    const SpeedFactorProfile& profile,
                                    const Scenario& scenario, int node_count) {
  const std::vector<TimeSample> times = time_map(profile, curve.tau_f, node_count);

  SampledTrajectory traj;
  traj.nodes.resize(times.size());
  traj.t_f = times.back().t;

  const NedVector current_vec = scenario.current.ned();

  for (size_t i = 0; i < times.size(); ++i) {
    const double tau_bar = times[i].tau_bar;
    TrajectoryNode& node = traj.nodes[i];
    node.t = times[i].t;
    node.tau_bar = tau_bar;
    node.position = curve.position(tau_bar, 0);

    const NedVector d1 = curve.position(tau_bar, 1);
    const double dtau_dt = profile.value(tau_bar) / curve.tau_f;
    node.ground_velocity = d1 * dtau_dt;
    node.speed = node.ground_velocity.norm();

    if (d1.north == 0.0 && d1.east == 0.0) {
      throw SamplingError("sample_trajectory: vertical path segment, pitch undefined",
                          static_cast<int>(i));
    }
    node.pitch = pitch_from_slope(d1.north, d1.east, d1.down);
    node.flight_path_angle = node.pitch;

    node.yaw = wrap_pi(curve.heading(tau_bar, 0));
    node.yaw_rate = curve.heading(tau_bar, 1) * dtau_dt;

    const Attitude att(node.yaw, node.pitch);
    node.body = body_velocity_from_ground(node.ground_velocity, att, scenario.current);

    const Eigen::Vector3d water(node.ground_velocity.north - current_vec.north,
                                node.ground_velocity.east - current_vec.east,
                                node.ground_velocity.down);
    try {
      node.course_angle =
          course_angle(water.norm(), water_direction(water), scenario.current);
    } catch (const std::domain_error&) {
      throw SamplingError("sample_trajectory: course angle undefined",
                          static_cast<int>(i));
    }
  }

  // Pitch rate by finite differences of pitch over t.
  const size_t n = traj.nodes.size();
  for (size_t i = 0; i < n; ++i) {
    const size_t lo = (i == 0) ? 0 : i - 1;
    const size_t hi = (i + 1 == n) ? i : i + 1;
    traj.nodes[i].pitch_rate =
        (traj.nodes[hi].pitch - traj.nodes[lo].pitch) / (traj.nodes[hi].t - traj.nodes[lo].t);
  }

  return traj;
}

}  // namespace dockplan
