#include "dockplan/penalty.hpp"

#include <algorithm>
#include <cmath>

#include "dockplan/angles.hpp"

namespace dockplan {

namespace {

double square(double v) { return v * v; }

/// Natural-unit excess beyond a closed interval (at most one side positive).
double interval_excess(double value, double lo, double hi) {
  return std::max(0.0, value - hi) + std::max(0.0, lo - value);
}

/// Deepest keep-out penetration in meters.
double nofly_excess(const NedVector& position, const std::vector<NoFlyZone>& zones) {
  double worst = 0.0;
  for (const auto& zone : zones) {
    worst = std::max(worst, zone.radius - distance(position, zone.center));
  }
  return std::max(0.0, worst);
}

struct ApproachExcess {
  double horizontal = 0.0;
  double vertical = 0.0;
};

ApproachExcess approach_excess(const TrajectoryNode& node, const DockSpec& dock,
                               double terminal_window) {
  if (distance(node.position, dock.position) > terminal_window) return {};
  const double half_cone = dock.entry_cone_angle / 2.0;
  return {std::max(0.0, angular_distance(node.course_angle, dock.yaw) - half_cone),
          std::max(0.0, angular_distance(node.flight_path_angle, dock.pitch) - half_cone)};
}

}  // namespace

double interval_violation(double value, double lo, double hi) {
  return square(std::max(0.0, value - hi)) + square(std::max(0.0, lo - value));
}

double nofly_violation(const NedVector& position, const std::vector<NoFlyZone>& zones) {
  double total = 0.0;
  for (const auto& zone : zones) {
    total += square(std::max(0.0, zone.radius - distance(position, zone.center)));
  }
  return total;
}

ApproachViolation approach_violation(const TrajectoryNode& node, const DockSpec& dock,
                                     double terminal_window) {
  const ApproachExcess e = approach_excess(node, dock, terminal_window);
  return {square(e.horizontal), square(e.vertical)};
}

ViolationReport evaluate_cost(const SampledTrajectory& traj, const Scenario& scenario) {
  const auto& nodes = traj.nodes;
  const size_t n = nodes.size();
  const VehicleLimits& lim = scenario.limits;

  // Pointwise penalty (quadratic hinge) and natural-unit excess per channel.
  std::array<std::vector<double>, kChannelCount> penalty;
  for (auto& p : penalty) p.resize(n);
  ViolationReport report;

  for (size_t i = 0; i < n; ++i) {
    const TrajectoryNode& node = nodes[i];
    const ApproachExcess app_e =
        approach_excess(node, scenario.dock, scenario.terminal_window);

    const std::array<double, kChannelCount> hinge = {
        interval_violation(node.position.down, lim.depth.min, lim.depth.max),
        interval_violation(node.body.surge, lim.surge.min, lim.surge.max),
        interval_violation(node.body.sway, lim.sway.min, lim.sway.max),
        interval_violation(node.pitch_rate, lim.pitch_rate.min, lim.pitch_rate.max),
        interval_violation(node.yaw_rate, lim.yaw_rate.min, lim.yaw_rate.max),
        square(app_e.horizontal),
        square(app_e.vertical),
        nofly_violation(node.position, scenario.zones)};
    const std::array<double, kChannelCount> excess = {
        interval_excess(node.position.down, lim.depth.min, lim.depth.max),
        interval_excess(node.body.surge, lim.surge.min, lim.surge.max),
        interval_excess(node.body.sway, lim.sway.min, lim.sway.max),
        interval_excess(node.pitch_rate, lim.pitch_rate.min, lim.pitch_rate.max),
        interval_excess(node.yaw_rate, lim.yaw_rate.min, lim.yaw_rate.max),
        app_e.horizontal,
        app_e.vertical,
        nofly_excess(node.position, scenario.zones)};

    for (size_t c = 0; c < kChannelCount; ++c) {
      penalty[c][i] = hinge[c];
      report.channels[c].max_violation = std::max(report.channels[c].max_violation, excess[c]);
    }
  }

  // Trapezoidal time average of each channel's hinge penalty.
  const double duration = nodes.back().t - nodes.front().t;
  for (size_t c = 0; c < kChannelCount; ++c) {
    double integral = 0.0;
    for (size_t i = 1; i < n; ++i) {
      integral += 0.5 * (penalty[c][i - 1] + penalty[c][i]) * (nodes[i].t - nodes[i - 1].t);
    }
    report.channels[c].mean_penalty = integral / duration;
  }

  const PenaltyWeights& w = scenario.weights;
  const std::array<double, kChannelCount> weights = {
      w.depth, w.surge, w.sway, w.pitch_rate, w.yaw_rate,
      w.approach_horizontal, w.approach_vertical, w.nofly};

  report.flight_time = traj.t_f;
  report.total_cost = traj.t_f;
  for (size_t c = 0; c < kChannelCount; ++c) {
    report.total_cost += weights[c] * report.channels[c].mean_penalty;
  }

  report.feasible = true;
  for (const auto& ch : report.channels) {
    if (!(ch.max_violation < kFeasibilityThreshold)) report.feasible = false;
  }
  return report;
}

}  // namespace dockplan
