#include "dockplan/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "dockplan/angles.hpp"
#include "dockplan/planner.hpp"

namespace dockplan {

namespace {

/// Counter-based generator: splitmix64 over a seeded state. Each run owns an
/// independent stream, so results do not depend on execution order.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next_u64() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Standard normal via Box-Muller; always consumes two uniforms.
  double gaussian() {
    double u1 = uniform();
    const double u2 = uniform();
    while (u1 == 0.0) u1 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kPi * u2);
  }

 private:
  uint64_t state_;
};

double draw(const Perturbation& p, double nominal, Rng& rng) {
  switch (p.kind) {
    case Perturbation::Kind::None:
      return nominal;
    case Perturbation::Kind::Gaussian:
      return nominal + p.a * rng.gaussian();
    case Perturbation::Kind::Uniform:
      return p.a + (p.b - p.a) * rng.uniform();
  }
  return nominal;
}

RunMetrics failed_run(uint64_t seed) {
  RunMetrics m;
  m.seed = seed;
  m.feasible = false;
  m.flight_time = std::numeric_limits<double>::quiet_NaN();
  m.path_length = std::numeric_limits<double>::quiet_NaN();
  m.average_speed = std::numeric_limits<double>::quiet_NaN();
  m.final_position_error = std::numeric_limits<double>::quiet_NaN();
  m.final_heading_error = std::numeric_limits<double>::quiet_NaN();
  return m;
}

MetricStats stats_over(const std::vector<double>& values) {
  MetricStats s;
  if (values.empty()) return s;
  double sum = 0.0;
  s.min = values.front();
  s.max = values.front();
  for (double v : values) {
    sum += v;
    s.min = std::min(s.min, v);
    s.max = std::max(s.max, v);
  }
  s.mean = sum / static_cast<double>(values.size());
  if (values.size() > 1) {
    double sq = 0.0;
    for (double v : values) sq += (v - s.mean) * (v - s.mean);
    s.stddev = std::sqrt(sq / static_cast<double>(values.size() - 1));
  }
  return s;
}

}  // namespace

Experiment parse_experiment(const std::string& label) {
  if (label == "standard") return Experiment::Standard;
  if (label == "1") return Experiment::PoseUncertainty;
  if (label == "2") return Experiment::CurrentUncertainty;
  if (label == "3") return Experiment::FullHeadingUncertainty;
  throw std::invalid_argument("unknown experiment: " + label + " (use 1, 2, 3 or standard)");
}

const char* experiment_label(Experiment e) {
  switch (e) {
    case Experiment::Standard: return "standard";
    case Experiment::PoseUncertainty: return "1";
    case Experiment::CurrentUncertainty: return "2";
    case Experiment::FullHeadingUncertainty: return "3";
  }
  return "?";
}

PerturbationSpec experiment_spec(Experiment e) {
  PerturbationSpec spec;
  if (e == Experiment::Standard) return spec;

  // Boundary-pose uncertainty.
  spec.init_north = Perturbation::gaussian(10.0);
  spec.init_east = Perturbation::gaussian(10.0);
  spec.dock_north = Perturbation::gaussian(10.0);
  spec.dock_east = Perturbation::gaussian(10.0);
  spec.init_down = Perturbation::gaussian(2.0);
  spec.dock_down = Perturbation::gaussian(2.0);
  spec.init_yaw = Perturbation::gaussian(deg2rad(45.0));
  spec.dock_yaw = Perturbation::gaussian(deg2rad(45.0));
  if (e == Experiment::PoseUncertainty) return spec;

  // Current uncertainty on top.
  spec.current_magnitude = Perturbation::gaussian(0.3);
  spec.current_direction = Perturbation::gaussian(deg2rad(90.0));
  if (e == Experiment::CurrentUncertainty) return spec;

  // Heading channels widened to the full circle.
  spec.init_yaw = Perturbation::uniform(0.0, 2.0 * kPi);
  spec.dock_yaw = Perturbation::uniform(0.0, 2.0 * kPi);
  spec.current_direction = Perturbation::uniform(0.0, 2.0 * kPi);
  return spec;
}

Scenario perturb(const Scenario& nominal, const PerturbationSpec& spec, uint64_t seed) {
  Rng rng(seed);
  std::string last_error;
  for (int attempt = 0; attempt < 10; ++attempt) {
    Scenario sc = nominal;
    sc.start_position.north = draw(spec.init_north, nominal.start_position.north, rng);
    sc.start_position.east = draw(spec.init_east, nominal.start_position.east, rng);
    sc.start_position.down = draw(spec.init_down, nominal.start_position.down, rng);
    sc.dock.position.north = draw(spec.dock_north, nominal.dock.position.north, rng);
    sc.dock.position.east = draw(spec.dock_east, nominal.dock.position.east, rng);
    sc.dock.position.down = draw(spec.dock_down, nominal.dock.position.down, rng);
    sc.start_yaw = draw(spec.init_yaw, nominal.start_yaw, rng);
    sc.dock.yaw = draw(spec.dock_yaw, nominal.dock.yaw, rng);
    sc.current.magnitude = draw(spec.current_magnitude, nominal.current.magnitude, rng);
    if (spec.current_magnitude.kind == Perturbation::Kind::Gaussian &&
        sc.current.magnitude < 0.0) {
      sc.current.magnitude = 0.0;
    }
    sc.current.direction = draw(spec.current_direction, nominal.current.direction, rng);
    try {
      sc.validate();
      return sc;
    } catch (const ValidationError& e) {
      last_error = e.what();
    }
  }
  throw ValidationError("perturb: no valid scenario after 10 draws (" + last_error + ")");
}

std::map<std::string, double> StudySummary::metric_table() const {
  return {{"flight_time_mean", flight_time.mean},
          {"path_length_mean", path_length.mean},
          {"average_speed_mean", average_speed.mean},
          {"violation_percentage", violation_percentage},
          {"rmsd_final_position", rmsd_final_position}};
}

std::pair<std::vector<RunMetrics>, StudySummary> run_study(const Scenario& nominal,
                                                           const PerturbationSpec& spec,
                                                           int n_runs, uint64_t base_seed,
                                                           const StudyOptions& options) {
  if (n_runs < 1) throw std::invalid_argument("run_study: n_runs must be at least 1");

  std::vector<RunMetrics> rows(static_cast<size_t>(n_runs));

  auto run_one = [&](int k) {
    const uint64_t seed = base_seed + static_cast<uint64_t>(k);
    try {
      const Scenario sc = perturb(nominal, spec, seed);
      const PlanResult plan = optimize(sc, options.solver);

      RunMetrics m;
      m.seed = seed;
      m.flight_time = plan.report.flight_time;
      m.path_length = plan.trajectory.path_length();
      m.average_speed = m.path_length / m.flight_time;
      m.feasible = plan.report.within_tolerance(kPlanTolerance);
      m.final_position_error =
          distance(plan.trajectory.nodes.back().position, sc.dock.position);
      m.final_heading_error = angular_distance(plan.trajectory.nodes.back().yaw, sc.dock.yaw);
      m.wall_time = plan.wall_time;
      for (size_t c = 0; c < kChannelCount; ++c) {
        m.channel_violations[c] = plan.report.channels[c].max_violation;
      }
      return m;
    } catch (const std::exception&) {
      return failed_run(seed);
    }
  };

  int workers = options.threads > 0 ? options.threads
                                    : static_cast<int>(std::thread::hardware_concurrency());
  workers = std::clamp(workers, 1, n_runs);

  if (workers == 1) {
    for (int k = 0; k < n_runs; ++k) rows[static_cast<size_t>(k)] = run_one(k);
  } else {
    std::atomic<int> next{0};
    auto worker = [&]() {
      for (;;) {
        const int k = next.fetch_add(1);
        if (k >= n_runs) return;
        rows[static_cast<size_t>(k)] = run_one(k);
      }
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(workers));
    for (int i = 0; i < workers; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  StudySummary summary;
  summary.label = options.label;
  summary.n_runs = n_runs;

  std::vector<double> flight, length, speed, pos_err2;
  int infeasible = 0;
  for (const RunMetrics& m : rows) {
    if (!m.feasible) ++infeasible;
    if (!m.completed()) continue;
    flight.push_back(m.flight_time);
    length.push_back(m.path_length);
    speed.push_back(m.average_speed);
    pos_err2.push_back(m.final_position_error * m.final_position_error);
  }
  summary.flight_time = stats_over(flight);
  summary.path_length = stats_over(length);
  summary.average_speed = stats_over(speed);
  summary.violation_percentage =
      100.0 * static_cast<double>(infeasible) / static_cast<double>(n_runs);
  if (!pos_err2.empty()) {
    double sum = 0.0;
    for (double v : pos_err2) sum += v;
    summary.rmsd_final_position = std::sqrt(sum / static_cast<double>(pos_err2.size()));
  }
  return {std::move(rows), std::move(summary)};
}

ComparisonTable compare_to_standard(const StudySummary& standard,
                                    const std::vector<StudySummary>& experiments) {
  const auto base = standard.metric_table();
  ComparisonTable table;
  for (const auto& [name, value] : base) {
    (void)value;
    table.metrics.push_back(name);
  }

  for (const StudySummary& exp : experiments) {
    const auto m = exp.metric_table();
    if (m.size() != base.size()) {
      throw std::invalid_argument("compare_to_standard: metric sets do not match");
    }
    for (const auto& [name, value] : base) {
      (void)value;
      if (!m.contains(name)) {
        throw std::invalid_argument("compare_to_standard: metric sets do not match");
      }
    }
    table.labels.push_back(exp.label);
  }

  table.relative_difference.assign(table.metrics.size(),
                                   std::vector<double>(experiments.size(), 0.0));
  for (size_t i = 0; i < table.metrics.size(); ++i) {
    const double ref = base.at(table.metrics[i]);
    for (size_t j = 0; j < experiments.size(); ++j) {
      const double v = experiments[j].metric_table().at(table.metrics[i]);
      table.relative_difference[i][j] = (ref == 0.0) ? v : (v - ref) / ref;
    }
  }
  return table;
}

std::string ComparisonTable::format() const {
  std::ostringstream out;
  out << "metric";
  for (const auto& label : labels) out << "\trel_diff(" << label << ")";
  out << "\n";
  for (size_t i = 0; i < metrics.size(); ++i) {
    out << metrics[i];
    for (size_t j = 0; j < labels.size(); ++j) out << "\t" << relative_difference[i][j];
    out << "\n";
  }
  return out.str();
}

}  // namespace dockplan
