#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "dockplan/invdyn.hpp"
#include "dockplan/types.hpp"

namespace dockplan {

/// Violation channels in fixed order: depth, surge, sway, pitch rate,
/// yaw rate, horizontal approach angle, vertical approach angle, no-fly.
enum class Channel : size_t {
  Depth = 0,
  Surge,
  Sway,
  PitchRate,
  YawRate,
  ApproachHorizontal,
  ApproachVertical,
  NoFly,
};

inline constexpr size_t kChannelCount = 8;
inline constexpr std::array<const char*, kChannelCount> kChannelNames = {
    "depth",   "surge",    "sway",            "pitch_rate",
    "yaw_rate", "approach_h", "approach_v",   "nofly"};

/// Strict feasibility: every channel's worst pointwise violation (natural
/// units) below this threshold means no constraint is active at all. Sets
/// ViolationReport::feasible.
inline constexpr double kFeasibilityThreshold = 1e-9;

/// Planning-level acceptance tolerance. A smooth penalty pressed by the
/// flight-time objective settles a hair outside any active bound, so
/// optimized plans are judged against this natural-unit tolerance (exit
/// codes, Monte Carlo violation counting) rather than the strict flag.
inline constexpr double kPlanTolerance = 1e-3;

/// Per-channel aggregates over a trajectory.
///   max_violation: worst pointwise excess in natural units (m, m/s, rad/s,
///                  rad, or meters of keep-out penetration).
///   mean_penalty:  trapezoidal time average of the quadratic hinge, the
///                  quantity that enters the cost.
struct ChannelViolation {
  double max_violation = 0.0;
  double mean_penalty = 0.0;
};

/// Cost breakdown for one trajectory: flight time, per-channel aggregates,
/// weighted total and the hard feasibility verdict.
struct ViolationReport {
  std::array<ChannelViolation, kChannelCount> channels{};
  double flight_time = 0.0;
  double total_cost = 0.0;
  bool feasible = false;

  const ChannelViolation& operator[](Channel c) const {
    return channels[static_cast<size_t>(c)];
  }
  ChannelViolation& operator[](Channel c) { return channels[static_cast<size_t>(c)]; }

  /// True when every channel's worst violation is below `tol` natural units.
  bool within_tolerance(double tol) const {
    for (const auto& ch : channels) {
      if (!(ch.max_violation < tol)) return false;
    }
    return true;
  }
};

/// Quadratic hinge for a closed interval bound: squared excess beyond either
/// edge, zero inside. C1-continuous at the edges.
double interval_violation(double value, double lo, double hi);

/// Sum over zones of squared keep-out penetration depth.
double nofly_violation(const NedVector& position, const std::vector<NoFlyZone>& zones);

struct ApproachViolation {
  double horizontal = 0.0;
  double vertical = 0.0;
};

/// Squared excess of the approach angles beyond half the entry cone angle,
/// gated to nodes within terminal_window of the dock position.
ApproachViolation approach_violation(const TrajectoryNode& node, const DockSpec& dock,
                                     double terminal_window);

/// Evaluates all channels over the trajectory and assembles
///   total_cost = t_f + sum_i w_i * mean_penalty_i.
/// Pure and deterministic; identical inputs give bit-identical reports.
ViolationReport evaluate_cost(const SampledTrajectory& traj, const Scenario& scenario);

}  // namespace dockplan
