#include <CLI11.hpp>
#include <Eigen/Dense>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "dockplan/harness.hpp"
#include "dockplan/io.hpp"
#include "dockplan/planner.hpp"
#include "dockplan/refcurve.hpp"
#include "dockplan/scenario_io.hpp"

namespace fs = std::filesystem;
using namespace dockplan;

namespace {

struct CommonArgs {
  std::string scenario_path;
  std::string out_dir = ".";
  int nodes = 0;          // 0 = keep scenario value
  int max_evals = 0;      // 0 = keep scenario value
  bool degrees = false;
};

Scenario load_with_overrides(const CommonArgs& args) {
  Scenario sc = load_scenario(args.scenario_path);
  if (args.nodes > 0) sc.node_count = args.nodes;
  if (args.max_evals > 0) sc.solver.max_evaluations = args.max_evals;
  sc.validate();
  return sc;
}

void write_file(const fs::path& path, const std::string& contents) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << contents;
}

int cmd_plan(const CommonArgs& args) {
  const Scenario sc = load_with_overrides(args);
  const PlanResult result = optimize(sc, sc.solver);

  fs::create_directories(args.out_dir);
  {
    std::ofstream out(fs::path(args.out_dir) / "trajectory.csv");
    write_trajectory_csv(out, result.trajectory, args.degrees);
  }
  {
    std::ofstream out(fs::path(args.out_dir) / "violations.csv");
    write_violation_csv(out, result.report);
  }
  write_file(fs::path(args.out_dir) / "summary.json", plan_summary_json(result));

  const bool feasible = result.report.within_tolerance(kPlanTolerance);
  std::cout << (feasible ? "feasible" : "infeasible")
            << "  t_f=" << format_double(result.report.flight_time)
            << "s  cost=" << format_double(result.report.total_cost)
            << "  evaluations=" << result.evaluations
            << "  wall=" << format_double(result.wall_time) << "s\n";
  if (!feasible) {
    for (size_t c = 0; c < kChannelCount; ++c) {
      const double v = result.report.channels[c].max_violation;
      if (v >= kPlanTolerance) {
        std::cout << "violated channel: " << kChannelNames[c]
                  << " (max " << format_double(v) << ")\n";
      }
    }
    return 2;
  }
  return 0;
}

int cmd_montecarlo(const CommonArgs& args, const std::string& experiment, int runs,
                   uint64_t seed, int threads) {
  const Scenario sc = load_with_overrides(args);
  const Experiment exp = parse_experiment(experiment);

  StudyOptions options;
  options.solver = sc.solver;
  options.threads = threads > 0 ? threads : sc.solver.threads;
  options.label = experiment_label(exp);

  const auto [rows, summary] = run_study(sc, experiment_spec(exp), runs, seed, options);

  fs::create_directories(args.out_dir);
  const std::string tag = std::string("_") + experiment_label(exp);
  {
    std::ofstream out(fs::path(args.out_dir) / ("runs" + tag + ".csv"));
    write_run_metrics_csv(out, rows);
  }
  write_file(fs::path(args.out_dir) / ("summary" + tag + ".json"),
             study_summary_json(summary, seed));

  std::cout << "experiment " << summary.label << ": " << summary.n_runs
            << " runs, violation " << format_double(summary.violation_percentage)
            << "%, mean flight time " << format_double(summary.flight_time.mean)
            << "s, rmsd " << format_double(summary.rmsd_final_position) << "m\n";
  return 0;
}

template <typename Matrix>
void print_matrix(std::ostream& out, const char* name, const Matrix& m) {
  out << name << " (" << m.rows() << "x" << m.cols() << "):\n";
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      out << (c ? "  " : "") << format_double(m(r, c));
    }
    out << "\n";
  }
}

template <typename Matrix>
double condition_estimate(const Matrix& m) {
  const auto svd = Eigen::JacobiSVD<Eigen::MatrixXd>(m);
  return svd.singularValues()(0) / svd.singularValues()(svd.singularValues().size() - 1);
}

int cmd_matrix_check() {
  const auto m8 = spatial_boundary_matrix();
  const auto m6 = yaw_boundary_matrix();
  const MatrixSanity sanity = matrix_sanity();

  print_matrix(std::cout, "spatial boundary matrix", m8);
  std::cout << "determinant: " << format_double(sanity.spatial_determinant)
            << "  condition estimate: " << format_double(condition_estimate(m8)) << "\n\n";
  print_matrix(std::cout, "yaw boundary matrix", m6);
  std::cout << "determinant: " << format_double(sanity.yaw_determinant)
            << "  condition estimate: " << format_double(condition_estimate(m6)) << "\n";

  const bool ok = std::abs(sanity.spatial_determinant) > 0.0 &&
                  std::abs(sanity.yaw_determinant) > 0.0;
  std::cout << (ok ? "both matrices nonsingular\n" : "singular boundary matrix\n");
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"AUV funnel-dock trajectory planner"};
  app.require_subcommand(1);

  CommonArgs args;
  std::string experiment = "1";
  int runs = 100;
  uint64_t seed = 42;
  int threads = 0;

  CLI::App* plan = app.add_subcommand("plan", "Plan a single docking trajectory");
  plan->add_option("--scenario", args.scenario_path, "Scenario file")->required();
  plan->add_option("--out", args.out_dir, "Output directory");
  plan->add_option("--nodes", args.nodes, "Override trajectory node count");
  plan->add_option("--max-evals", args.max_evals, "Override optimizer evaluation budget");
  plan->add_flag("--degrees", args.degrees, "Write angles in degrees");

  CLI::App* mc = app.add_subcommand("montecarlo", "Run a Monte Carlo robustness study");
  mc->add_option("--scenario", args.scenario_path, "Scenario file")->required();
  mc->add_option("--out", args.out_dir, "Output directory");
  mc->add_option("--experiment", experiment, "Experiment id: 1, 2, 3 or standard");
  mc->add_option("--runs", runs, "Number of Monte Carlo runs");
  mc->add_option("--seed", seed, "Base seed; run k uses seed+k");
  mc->add_option("--threads", threads, "Worker threads (0 = hardware)");
  mc->add_option("--nodes", args.nodes, "Override trajectory node count");
  mc->add_option("--max-evals", args.max_evals, "Override optimizer evaluation budget");

  CLI::App* check = app.add_subcommand(
      "emit-matrix-check", "Print the boundary matrices and their determinants");

  CLI11_PARSE(app, argc, argv);

  try {
    if (plan->parsed()) return cmd_plan(args);
    if (mc->parsed()) return cmd_montecarlo(args, experiment, runs, seed, threads);
    if (check->parsed()) return cmd_matrix_check();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
