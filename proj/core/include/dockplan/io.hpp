#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "dockplan/harness.hpp"
#include "dockplan/invdyn.hpp"
#include "dockplan/penalty.hpp"
#include "dockplan/planner.hpp"

namespace dockplan {

/// Shortest decimal representation that parses back to the identical double.
std::string format_double(double value);
double parse_double(std::string_view text);

/// One parsed trajectory CSV row (angles in radians unless the file was
/// written with degree output).
struct TrajectoryRow {
  double t, x, y, z, psi, theta, u, v, w, psi_dot, theta_dot, chi, speed;
};

/// Columns: t,x,y,z,psi,theta,u,v,w,psi_dot,theta_dot,chi,speed.
void write_trajectory_csv(std::ostream& out, const SampledTrajectory& traj,
                          bool degrees = false);
std::vector<TrajectoryRow> read_trajectory_csv(std::istream& in);

/// Single-record wide CSV: flight time, total cost, feasibility, then
/// max/mean per channel.
void write_violation_csv(std::ostream& out, const ViolationReport& report);
ViolationReport read_violation_csv(std::istream& in);

/// One row per Monte Carlo run plus the per-channel worst violations.
void write_run_metrics_csv(std::ostream& out, const std::vector<RunMetrics>& rows);
std::vector<RunMetrics> read_run_metrics_csv(std::istream& in);

/// JSON run summaries.
std::string plan_summary_json(const PlanResult& result);
std::string study_summary_json(const StudySummary& summary, uint64_t base_seed);

}  // namespace dockplan
