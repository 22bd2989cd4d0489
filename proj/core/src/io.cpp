#include "dockplan/io.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "dockplan/angles.hpp"

namespace dockplan {

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) fields.push_back(field);
  return fields;
}

std::vector<std::vector<double>> read_numeric_csv(std::istream& in,
                                                  const std::string& expected_header) {
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("csv: missing header");
  if (line != expected_header) throw std::runtime_error("csv: unexpected header: " + line);

  const size_t columns = split_csv_line(expected_header).size();
  std::vector<std::vector<double>> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const std::vector<std::string> fields = split_csv_line(line);
    if (fields.size() != columns) throw std::runtime_error("csv: ragged row: " + line);
    std::vector<double> row(columns);
    for (size_t i = 0; i < columns; ++i) row[i] = parse_double(fields[i]);
    rows.push_back(std::move(row));
  }
  return rows;
}

constexpr char kTrajectoryHeader[] =
    "t,x,y,z,psi,theta,u,v,w,psi_dot,theta_dot,chi,speed";

std::string violation_header() {
  std::string h = "flight_time,total_cost,feasible";
  for (const char* name : kChannelNames) {
    h += std::string(",") + name + "_max," + name + "_mean";
  }
  return h;
}

std::string run_metrics_header() {
  std::string h =
      "seed,flight_time,path_length,average_speed,feasible,"
      "final_position_error,final_heading_error,wall_time";
  for (const char* name : kChannelNames) h += std::string(",") + name + "_max";
  return h;
}

}  // namespace

std::string format_double(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, res.ptr);
}

double parse_double(std::string_view text) {
  double value = 0.0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
  if (res.ec != std::errc{} || res.ptr != text.data() + text.size()) {
    throw std::runtime_error("csv: cannot parse number: " + std::string(text));
  }
  return value;
}

void write_trajectory_csv(std::ostream& out, const SampledTrajectory& traj, bool degrees) {
  out << kTrajectoryHeader << "\n";
  const double k = degrees ? 180.0 / kPi : 1.0;
  for (const TrajectoryNode& n : traj.nodes) {
    out << format_double(n.t) << ',' << format_double(n.position.north) << ','
        << format_double(n.position.east) << ',' << format_double(n.position.down) << ','
        << format_double(n.yaw * k) << ',' << format_double(n.pitch * k) << ','
        << format_double(n.body.surge) << ',' << format_double(n.body.sway) << ','
        << format_double(n.body.heave) << ',' << format_double(n.yaw_rate * k) << ','
        << format_double(n.pitch_rate * k) << ',' << format_double(n.course_angle * k) << ','
        << format_double(n.speed) << "\n";
  }
}

std::vector<TrajectoryRow> read_trajectory_csv(std::istream& in) {
  const auto rows = read_numeric_csv(in, kTrajectoryHeader);
  std::vector<TrajectoryRow> out;
  out.reserve(rows.size());
  for (const auto& r : rows) {
    out.push_back({r[0], r[1], r[2], r[3], r[4], r[5], r[6], r[7], r[8], r[9], r[10], r[11],
                   r[12]});
  }
  return out;
}

void write_violation_csv(std::ostream& out, const ViolationReport& report) {
  out << violation_header() << "\n";
  out << format_double(report.flight_time) << ',' << format_double(report.total_cost) << ','
      << (report.feasible ? 1 : 0);
  for (const auto& ch : report.channels) {
    out << ',' << format_double(ch.max_violation) << ',' << format_double(ch.mean_penalty);
  }
  out << "\n";
}

ViolationReport read_violation_csv(std::istream& in) {
  const auto rows = read_numeric_csv(in, violation_header());
  if (rows.size() != 1) throw std::runtime_error("violation csv: expected exactly one row");
  const auto& r = rows.front();
  ViolationReport report;
  report.flight_time = r[0];
  report.total_cost = r[1];
  report.feasible = r[2] != 0.0;
  for (size_t c = 0; c < kChannelCount; ++c) {
    report.channels[c].max_violation = r[3 + 2 * c];
    report.channels[c].mean_penalty = r[4 + 2 * c];
  }
  return report;
}

void write_run_metrics_csv(std::ostream& out, const std::vector<RunMetrics>& rows) {
  out << run_metrics_header() << "\n";
  for (const RunMetrics& m : rows) {
    out << m.seed << ',' << format_double(m.flight_time) << ','
        << format_double(m.path_length) << ',' << format_double(m.average_speed) << ','
        << (m.feasible ? 1 : 0) << ',' << format_double(m.final_position_error) << ','
        << format_double(m.final_heading_error) << ',' << format_double(m.wall_time);
    for (double v : m.channel_violations) out << ',' << format_double(v);
    out << "\n";
  }
}

std::vector<RunMetrics> read_run_metrics_csv(std::istream& in) {
  const auto rows = read_numeric_csv(in, run_metrics_header());
  std::vector<RunMetrics> out;
  out.reserve(rows.size());
  for (const auto& r : rows) {
    RunMetrics m;
    m.seed = static_cast<uint64_t>(r[0]);
    m.flight_time = r[1];
    m.path_length = r[2];
    m.average_speed = r[3];
    m.feasible = r[4] != 0.0;
    m.final_position_error = r[5];
    m.final_heading_error = r[6];
    m.wall_time = r[7];
    for (size_t c = 0; c < kChannelCount; ++c) m.channel_violations[c] = r[8 + c];
    out.push_back(m);
  }
  return out;
}

std::string plan_summary_json(const PlanResult& result) {
  nlohmann::json j;
  j["cost"] = result.report.total_cost;
  j["t_f"] = result.report.flight_time;
  j["feasible"] = result.report.feasible;
  j["iterations"] = result.iterations;
  j["evaluations"] = result.evaluations;
  j["converged"] = result.converged;
  j["wall_time_s"] = result.wall_time;
  j["decision"] = {
      {"tau_f", result.decision.tau_f},
      {"jerk_initial", {result.decision.jerk_initial.north, result.decision.jerk_initial.east,
                        result.decision.jerk_initial.down}},
      {"jerk_final", {result.decision.jerk_final.north, result.decision.jerk_final.east,
                      result.decision.jerk_final.down}},
      {"lambda_m", result.decision.lambda_m},
  };
  return j.dump(2) + "\n";
}

std::string study_summary_json(const StudySummary& s, uint64_t base_seed) {
  auto stats = [](const MetricStats& m) {
    return nlohmann::json{
        {"mean", m.mean}, {"stddev", m.stddev}, {"min", m.min}, {"max", m.max}};
  };
  nlohmann::json j;
  j["experiment"] = s.label;
  j["n_runs"] = s.n_runs;
  j["base_seed"] = base_seed;
  j["flight_time"] = stats(s.flight_time);
  j["path_length"] = stats(s.path_length);
  j["average_speed"] = stats(s.average_speed);
  j["violation_percentage"] = s.violation_percentage;
  j["rmsd_final_position_m"] = s.rmsd_final_position;
  return j.dump(2) + "\n";
}

}  // namespace dockplan
