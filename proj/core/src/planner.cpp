#include "dockplan/planner.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>

#include "dockplan/angles.hpp"
#include "dockplan/nelder_mead.hpp"

namespace dockplan {

namespace {

void check_decision(const DecisionVector& d) {
  if (!(d.tau_f > 0.0) || !std::isfinite(d.tau_f)) {
    throw std::domain_error("decision vector: tau_f must be positive");
  }
  if (!(d.lambda_m > -1.0) || !std::isfinite(d.lambda_m)) {
    throw std::domain_error("decision vector: lambda_m must exceed -1");
  }
  if (!d.jerk_initial.is_finite() || !d.jerk_final.is_finite()) {
    throw std::domain_error("decision vector: jerks must be finite");
  }
}

/// Reflect coordinates back into the open decision-vector domain.
DecisionVector reflect_into_domain(const std::array<double, 8>& raw) {
  std::array<double, 8> a = raw;
  if (a[0] < 0.0) a[0] = -a[0];
  if (a[7] < -1.0) a[7] = -2.0 - a[7];
  return DecisionVector::from_array(a);
}

}  // namespace

ReferenceCurve build_reference_curve(const DecisionVector& d, const Scenario& scenario) {
  const BoundaryConditions& bc = scenario.boundary;

  auto axis = [&](double p0, double v0, double acc0, double j0, double pf, double vf,
                  double accf, double jf) {
    return solve_spatial_axis({p0, v0, acc0, j0, pf, vf, accf, jf}, d.tau_f);
  };

  ReferenceCurve curve;
  curve.tau_f = d.tau_f;
  curve.x = axis(bc.initial.position.north, bc.initial.velocity.north,
                 bc.initial.acceleration.north, d.jerk_initial.north,
                 bc.terminal.position.north, bc.terminal.velocity.north,
                 bc.terminal.acceleration.north, d.jerk_final.north);
  curve.y = axis(bc.initial.position.east, bc.initial.velocity.east,
                 bc.initial.acceleration.east, d.jerk_initial.east,
                 bc.terminal.position.east, bc.terminal.velocity.east,
                 bc.terminal.acceleration.east, d.jerk_final.east);
  curve.z = axis(bc.initial.position.down, bc.initial.velocity.down,
                 bc.initial.acceleration.down, d.jerk_initial.down,
                 bc.terminal.position.down, bc.terminal.velocity.down,
                 bc.terminal.acceleration.down, d.jerk_final.down);

  // Take the short way between the boundary headings.
  const double yaw0 = bc.initial.yaw;
  const double yawf = yaw0 + wrap_pi(bc.terminal.yaw - yaw0);
  curve.yaw = solve_yaw({yaw0, bc.initial.yaw_rate, bc.initial.yaw_accel, yawf,
                         bc.terminal.yaw_rate, bc.terminal.yaw_accel},
                        d.tau_f);
  return curve;
}

std::pair<SampledTrajectory, ViolationReport> assemble(const DecisionVector& d,
                                                       const Scenario& scenario) {
  check_decision(d);
  const ReferenceCurve curve = build_reference_curve(d, scenario);
  SampledTrajectory traj =
      sample_trajectory(curve, SpeedFactorProfile{d.lambda_m}, scenario, scenario.node_count);
  ViolationReport report = evaluate_cost(traj, scenario);
  return {std::move(traj), std::move(report)};
}

DecisionVector initial_guess(const Scenario& scenario) {
  const double dist = distance(scenario.start_position, scenario.dock.position);
  if (dist == 0.0) {
    throw std::domain_error("initial_guess: start position coincides with the dock");
  }
  const double cruise = 0.5 * (scenario.limits.surge.min + scenario.limits.surge.max);
  if (!(cruise > 0.0)) {
    throw std::domain_error("initial_guess: surge limit midpoint must be positive");
  }
  DecisionVector d;
  d.tau_f = dist / cruise;
  d.lambda_m = 0.0;
  return d;
}

PlanResult optimize(const Scenario& scenario, const SolverOptions& options) {
  const auto t_start = std::chrono::steady_clock::now();

  auto objective = [&scenario](const std::vector<double>& raw) {
    std::array<double, 8> a{};
    std::copy(raw.begin(), raw.end(), a.begin());
    const DecisionVector d = reflect_into_domain(a);
    try {
      return assemble(d, scenario).second.total_cost;
    } catch (const std::domain_error&) {
      return kInfeasibleCostBase + d.tau_f;
    }
  };

  const DecisionVector guess = initial_guess(scenario);
  const std::array<double, 8> g = guess.to_array();
  std::vector<std::vector<double>> simplex;
  simplex.reserve(9);
  simplex.emplace_back(g.begin(), g.end());
  const std::array<double, 8> steps = {g[0] * options.tau_scale,
                                       options.jerk_scale, options.jerk_scale,
                                       options.jerk_scale, options.jerk_scale,
                                       options.jerk_scale, options.jerk_scale,
                                       options.lambda_scale};
  for (size_t d = 0; d < 8; ++d) {
    std::vector<double> vertex(g.begin(), g.end());
    vertex[d] += steps[d];
    simplex.push_back(std::move(vertex));
  }

  SimplexOptions sim;
  sim.tolerance = options.tolerance;
  sim.max_evaluations = options.max_evaluations;
  const SimplexResult sol = nelder_mead(objective, std::move(simplex), sim);

  if (!(sol.best_value < kInfeasibleCostBase)) {
    throw std::runtime_error("optimize: no decision vector could be evaluated");
  }

  std::array<double, 8> best{};
  std::copy(sol.best_point.begin(), sol.best_point.end(), best.begin());

  PlanResult result;
  result.decision = reflect_into_domain(best);
  auto [traj, report] = assemble(result.decision, scenario);
  result.trajectory = std::move(traj);
  result.report = std::move(report);
  result.iterations = sol.iterations;
  result.evaluations = sol.evaluations;
  result.converged = sol.converged;
  result.best_cost_trace = sol.best_value_trace;
  result.wall_time =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();
  return result;
}

}  // namespace dockplan
