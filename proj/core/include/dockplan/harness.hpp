#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dockplan/penalty.hpp"
#include "dockplan/types.hpp"

namespace dockplan {

/// One perturbation channel: either inactive, a zero-mean Gaussian added to
/// the nominal value, or a uniform draw replacing it.
struct Perturbation {
  enum class Kind { None, Gaussian, Uniform };
  Kind kind = Kind::None;
  double a = 0.0;  // Gaussian: sigma; Uniform: lower bound
  double b = 0.0;  // Uniform: upper bound

  static Perturbation none() { return {}; }
  static Perturbation gaussian(double sigma) { return {Kind::Gaussian, sigma, 0.0}; }
  static Perturbation uniform(double lo, double hi) { return {Kind::Uniform, lo, hi}; }
};

/// Distribution descriptors for every perturbable scenario parameter.
/// Draws happen in declaration order, one stream per run.
struct PerturbationSpec {
  Perturbation init_north, init_east, init_down;
  Perturbation dock_north, dock_east, dock_down;
  Perturbation init_yaw, dock_yaw;            // radians
  Perturbation current_magnitude;             // Gaussian draws clamp at 0
  Perturbation current_direction;             // radians
};

enum class Experiment { Standard, PoseUncertainty, CurrentUncertainty, FullHeadingUncertainty };

/// Parses "standard" / "1" / "2" / "3".
Experiment parse_experiment(const std::string& label);
const char* experiment_label(Experiment e);

/// The three study configurations: (1) boundary-pose uncertainty,
/// (2) additionally current uncertainty, (3) as (2) with the three heading
/// channels switched to uniform draws over the full circle.
PerturbationSpec experiment_spec(Experiment e);

/// Applies the spec to the nominal scenario with a deterministic per-seed
/// stream. Invalid draws are redrawn up to 10 times, then an error is
/// raised. Gaussian current-magnitude draws are clamped at zero.
Scenario perturb(const Scenario& nominal, const PerturbationSpec& spec, uint64_t seed);

/// Outcome of one optimized run. wall_time is measured and therefore not
/// deterministic; every other field is a pure function of the inputs.
struct RunMetrics {
  uint64_t seed = 0;
  double flight_time = 0.0;
  double path_length = 0.0;
  double average_speed = 0.0;
  bool feasible = false;
  double final_position_error = 0.0;   // m, vs the perturbed dock position
  double final_heading_error = 0.0;    // rad, vs the perturbed dock heading
  double wall_time = 0.0;
  std::array<double, kChannelCount> channel_violations{};  // max, natural units

  bool completed() const { return std::isfinite(flight_time); }
};

struct MetricStats {
  double mean = 0.0;
  double stddev = 0.0;  // sample standard deviation
  double min = 0.0;
  double max = 0.0;
};

struct StudySummary {
  std::string label;
  int n_runs = 0;
  MetricStats flight_time;
  MetricStats path_length;
  MetricStats average_speed;
  double violation_percentage = 0.0;   // runs with feasible == false, in percent
  double rmsd_final_position = 0.0;    // m

  /// Named scalar metrics used for cross-experiment comparison.
  std::map<std::string, double> metric_table() const;
};

struct StudyOptions {
  int threads = 0;  // 0 = hardware concurrency
  SolverOptions solver;
  std::string label;
};

/// Optimizes n_runs independently perturbed scenarios (seed base_seed + k
/// for run k) and aggregates the metrics. Runs execute concurrently but
/// results are ordered and valued independently of the execution order.
/// Individual run failures become infeasible rows, never aborts.
std::pair<std::vector<RunMetrics>, StudySummary> run_study(const Scenario& nominal,
                                                           const PerturbationSpec& spec,
                                                           int n_runs, uint64_t base_seed,
                                                           const StudyOptions& options = {});

/// Per-metric relative differences of each experiment against the standard
/// condition. Throws if the metric sets do not match.
struct ComparisonTable {
  std::vector<std::string> metrics;
  std::vector<std::string> labels;
  std::vector<std::vector<double>> relative_difference;  // [metric][experiment]
  std::string format() const;
};

ComparisonTable compare_to_standard(const StudySummary& standard,
                                    const std::vector<StudySummary>& experiments);

}  // namespace dockplan
