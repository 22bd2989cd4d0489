#pragma once

#include <utility>
#include <vector>

#include "dockplan/invdyn.hpp"
#include "dockplan/penalty.hpp"
#include "dockplan/refcurve.hpp"
#include "dockplan/types.hpp"

namespace dockplan {

/// The optimizer's eight free scalars: final virtual argument, boundary
/// jerks for the three spatial axes at both ends, and the speed-factor
/// shape parameter.
struct DecisionVector {
  double tau_f = 1.0;          // > 0
  NedVector jerk_initial;      // m/s^3
  NedVector jerk_final;        // m/s^3
  double lambda_m = 0.0;       // > -1

  std::array<double, 8> to_array() const {
    return {tau_f,
            jerk_initial.north, jerk_initial.east, jerk_initial.down,
            jerk_final.north,   jerk_final.east,   jerk_final.down,
            lambda_m};
  }
  static DecisionVector from_array(const std::array<double, 8>& a) {
    return {a[0], {a[1], a[2], a[3]}, {a[4], a[5], a[6]}, a[7]};
  }
};

/// Cost assigned to decision vectors whose assembly fails a domain check;
/// large but finite so the simplex can move away from them.
inline constexpr double kInfeasibleCostBase = 1e12;

struct PlanResult {
  DecisionVector decision;
  SampledTrajectory trajectory;
  ViolationReport report;
  int iterations = 0;
  int evaluations = 0;
  double wall_time = 0.0;   // seconds, measured; not deterministic
  bool converged = false;
  std::vector<double> best_cost_trace;  // best-ever cost per iteration
};

/// Builds the four reference curves from the scenario's boundary conditions
/// plus the decision vector's jerks and tau_f.
ReferenceCurve build_reference_curve(const DecisionVector& d, const Scenario& scenario);

/// Full pipeline for one decision vector: solve curves, sample states,
/// evaluate the cost. Pure function of its inputs. Throws std::domain_error
/// for invalid decision vectors and SamplingError for degenerate geometry.
std::pair<SampledTrajectory, ViolationReport> assemble(const DecisionVector& d,
                                                       const Scenario& scenario);

/// Scale-aware starting point: tau_f from the straight-line distance over
/// the nominal cruise speed (midpoint of the surge interval), zero jerks,
/// flat speed factor.
DecisionVector initial_guess(const Scenario& scenario);

/// Minimizes flight time plus penalties over the decision vector with the
/// downhill-simplex method. Deterministic for fixed inputs. The returned
/// report is recomputed from the returned trajectory.
PlanResult optimize(const Scenario& scenario, const SolverOptions& options);

}  // namespace dockplan
