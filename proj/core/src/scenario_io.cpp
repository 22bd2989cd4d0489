#include "dockplan/scenario_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "dockplan/angles.hpp"

namespace dockplan {

namespace {

using nlohmann::json;

constexpr double kDegToRad = kPi / 180.0;

/// Degree value whose conversion to radians reproduces `rad` exactly.
/// Radians originating from a degree key always have such a preimage; for
/// other values the nearest degree representation is returned.
double degrees_for(double rad) {
  const double d0 = rad / kDegToRad;
  double candidates[5] = {d0, std::nextafter(d0, d0 + 1.0), std::nextafter(d0, d0 - 1.0)};
  candidates[3] = std::nextafter(candidates[1], candidates[1] + 1.0);
  candidates[4] = std::nextafter(candidates[2], candidates[2] - 1.0);
  for (double d : candidates) {
    if (d * kDegToRad == rad) return d;
  }
  return d0;
}

double get_number(const json& j, const std::string& key, const char* section) {
  if (!j.contains(key)) {
    throw ValidationError(std::string(section) + "." + key + " is required");
  }
  if (!j.at(key).is_number()) {
    throw ValidationError(std::string(section) + "." + key + " must be a number");
  }
  return j.at(key).get<double>();
}

double get_number_or(const json& j, const std::string& key, double fallback) {
  if (!j.contains(key)) return fallback;
  if (!j.at(key).is_number()) {
    throw ValidationError(key + " must be a number");
  }
  return j.at(key).get<double>();
}

double get_angle(const json& j, const std::string& deg_key, const char* section) {
  return deg2rad(get_number(j, deg_key, section));
}

double get_angle_or(const json& j, const std::string& deg_key, double fallback_rad) {
  if (!j.contains(deg_key)) return fallback_rad;
  return deg2rad(j.at(deg_key).get<double>());
}

NedVector get_ned(const json& j, const std::string& key, const char* section) {
  if (!j.contains(key)) {
    throw ValidationError(std::string(section) + "." + key + " is required");
  }
  const json& v = j.at(key);
  return {get_number(v, "north", section), get_number(v, "east", section),
          get_number(v, "down", section)};
}

NedVector get_ned_or(const json& j, const std::string& key, const NedVector& fallback) {
  if (!j.contains(key)) return fallback;
  const json& v = j.at(key);
  return {get_number(v, "north", key.c_str()), get_number(v, "east", key.c_str()),
          get_number(v, "down", key.c_str())};
}

Interval get_interval_or(const json& j, const std::string& key, Interval fallback,
                         bool degrees) {
  if (!j.contains(key)) return fallback;
  const json& v = j.at(key);
  Interval iv{get_number(v, "min", key.c_str()), get_number(v, "max", key.c_str())};
  if (degrees) {
    iv.min = deg2rad(iv.min);
    iv.max = deg2rad(iv.max);
  }
  return iv;
}

json ned_json(const NedVector& v) {
  return json{{"north", v.north}, {"east", v.east}, {"down", v.down}};
}

json interval_json(const Interval& iv, bool degrees) {
  if (degrees) return json{{"min", degrees_for(iv.min)}, {"max", degrees_for(iv.max)}};
  return json{{"min", iv.min}, {"max", iv.max}};
}

}  // namespace

Scenario scenario_from_json(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("scenario parse error: ") + e.what());
  }

  Scenario sc;

  if (!root.contains("boundary") || !root.at("boundary").contains("initial")) {
    throw ValidationError("boundary.initial section is required");
  }
  const json& initial = root.at("boundary").at("initial");
  sc.start_position = get_ned(initial, "position", "boundary.initial");
  sc.start_yaw = get_angle(initial, "yaw_deg", "boundary.initial");
  sc.start_pitch = get_angle_or(initial, "pitch_deg", 0.0);
  sc.initial_water_speed = get_number(initial, "water_speed", "boundary.initial");
  sc.initial_acceleration = get_ned_or(initial, "acceleration", NedVector{});
  sc.initial_yaw_rate = get_angle_or(initial, "yaw_rate_deg", 0.0);
  sc.initial_yaw_accel = get_angle_or(initial, "yaw_accel_deg", 0.0);

  if (root.at("boundary").contains("final")) {
    const json& fin = root.at("boundary").at("final");
    sc.final_water_speed = get_number(fin, "water_speed", "boundary.final");
    sc.final_acceleration = get_ned_or(fin, "acceleration", NedVector{});
    sc.final_yaw_rate = get_angle_or(fin, "yaw_rate_deg", 0.0);
    sc.final_yaw_accel = get_angle_or(fin, "yaw_accel_deg", 0.0);
  } else {
    sc.final_water_speed = sc.initial_water_speed;
  }

  if (!root.contains("dock")) throw ValidationError("dock section is required");
  const json& dock = root.at("dock");
  sc.dock.position = get_ned(dock, "position", "dock");
  sc.dock.yaw = get_angle(dock, "yaw_deg", "dock");
  sc.dock.pitch = get_angle_or(dock, "pitch_deg", 0.0);
  sc.dock.cone_length = get_number_or(dock, "cone_length", sc.dock.cone_length);
  sc.dock.outer_radius = get_number_or(dock, "outer_radius", sc.dock.outer_radius);
  sc.dock.inner_radius = get_number_or(dock, "inner_radius", sc.dock.inner_radius);
  sc.dock.entry_cone_angle =
      get_angle_or(dock, "entry_cone_angle_deg", sc.dock.entry_cone_angle);

  if (root.contains("current")) {
    const json& cur = root.at("current");
    sc.current.magnitude = get_number(cur, "magnitude", "current");
    sc.current.direction = get_angle(cur, "direction_deg", "current");
  }

  if (root.contains("zones")) {
    if (!root.at("zones").is_array()) throw ValidationError("zones must be an array");
    for (const json& z : root.at("zones")) {
      sc.zones.push_back({get_ned(z, "center", "zones[]"), get_number(z, "radius", "zones[]")});
    }
  }

  if (root.contains("limits")) {
    const json& lim = root.at("limits");
    VehicleLimits defaults = VehicleLimits::defaults();
    sc.limits.depth = get_interval_or(lim, "depth", defaults.depth, false);
    sc.limits.surge = get_interval_or(lim, "surge", defaults.surge, false);
    sc.limits.sway = get_interval_or(lim, "sway", defaults.sway, false);
    sc.limits.pitch_rate = get_interval_or(lim, "pitch_rate_deg", defaults.pitch_rate, true);
    sc.limits.yaw_rate = get_interval_or(lim, "yaw_rate_deg", defaults.yaw_rate, true);
  }

  if (root.contains("weights")) {
    const json& w = root.at("weights");
    PenaltyWeights defaults = PenaltyWeights::defaults();
    sc.weights.depth = get_number_or(w, "depth", defaults.depth);
    sc.weights.surge = get_number_or(w, "surge", defaults.surge);
    sc.weights.sway = get_number_or(w, "sway", defaults.sway);
    sc.weights.pitch_rate = get_number_or(w, "pitch_rate", defaults.pitch_rate);
    sc.weights.yaw_rate = get_number_or(w, "yaw_rate", defaults.yaw_rate);
    sc.weights.approach_horizontal =
        get_number_or(w, "approach_horizontal", defaults.approach_horizontal);
    sc.weights.approach_vertical =
        get_number_or(w, "approach_vertical", defaults.approach_vertical);
    sc.weights.nofly = get_number_or(w, "nofly", defaults.nofly);
  }

  sc.terminal_window = get_number_or(root, "terminal_window", sc.terminal_window);

  if (root.contains("solver")) {
    const json& sol = root.at("solver");
    sc.node_count = static_cast<int>(get_number_or(sol, "node_count", sc.node_count));
    sc.solver.max_evaluations =
        static_cast<int>(get_number_or(sol, "max_evaluations", sc.solver.max_evaluations));
    sc.solver.tolerance = get_number_or(sol, "tolerance", sc.solver.tolerance);
    sc.solver.tau_scale = get_number_or(sol, "simplex_tau_scale", sc.solver.tau_scale);
    sc.solver.jerk_scale = get_number_or(sol, "simplex_jerk_scale", sc.solver.jerk_scale);
    sc.solver.lambda_scale =
        get_number_or(sol, "simplex_lambda_scale", sc.solver.lambda_scale);
    sc.solver.threads = static_cast<int>(get_number_or(sol, "threads", sc.solver.threads));
  }

  sc.validate();
  return sc;
}

std::string scenario_to_json(const Scenario& sc) {
  json root;
  root["boundary"]["initial"] = {
      {"position", ned_json(sc.start_position)},
      {"yaw_deg", degrees_for(sc.start_yaw)},
      {"pitch_deg", degrees_for(sc.start_pitch)},
      {"water_speed", sc.initial_water_speed},
      {"acceleration", ned_json(sc.initial_acceleration)},
      {"yaw_rate_deg", degrees_for(sc.initial_yaw_rate)},
      {"yaw_accel_deg", degrees_for(sc.initial_yaw_accel)},
  };
  root["boundary"]["final"] = {
      {"water_speed", sc.final_water_speed},
      {"acceleration", ned_json(sc.final_acceleration)},
      {"yaw_rate_deg", degrees_for(sc.final_yaw_rate)},
      {"yaw_accel_deg", degrees_for(sc.final_yaw_accel)},
  };
  root["dock"] = {
      {"position", ned_json(sc.dock.position)},
      {"yaw_deg", degrees_for(sc.dock.yaw)},
      {"pitch_deg", degrees_for(sc.dock.pitch)},
      {"cone_length", sc.dock.cone_length},
      {"outer_radius", sc.dock.outer_radius},
      {"inner_radius", sc.dock.inner_radius},
      {"entry_cone_angle_deg", degrees_for(sc.dock.entry_cone_angle)},
  };
  root["current"] = {{"magnitude", sc.current.magnitude},
                     {"direction_deg", degrees_for(sc.current.direction)}};
  root["zones"] = json::array();
  for (const auto& z : sc.zones) {
    root["zones"].push_back({{"center", ned_json(z.center)}, {"radius", z.radius}});
  }
  root["limits"] = {
      {"depth", interval_json(sc.limits.depth, false)},
      {"surge", interval_json(sc.limits.surge, false)},
      {"sway", interval_json(sc.limits.sway, false)},
      {"pitch_rate_deg", interval_json(sc.limits.pitch_rate, true)},
      {"yaw_rate_deg", interval_json(sc.limits.yaw_rate, true)},
  };
  root["weights"] = {
      {"depth", sc.weights.depth},
      {"surge", sc.weights.surge},
      {"sway", sc.weights.sway},
      {"pitch_rate", sc.weights.pitch_rate},
      {"yaw_rate", sc.weights.yaw_rate},
      {"approach_horizontal", sc.weights.approach_horizontal},
      {"approach_vertical", sc.weights.approach_vertical},
      {"nofly", sc.weights.nofly},
  };
  root["terminal_window"] = sc.terminal_window;
  root["solver"] = {
      {"node_count", sc.node_count},
      {"max_evaluations", sc.solver.max_evaluations},
      {"tolerance", sc.solver.tolerance},
      {"simplex_tau_scale", sc.solver.tau_scale},
      {"simplex_jerk_scale", sc.solver.jerk_scale},
      {"simplex_lambda_scale", sc.solver.lambda_scale},
      {"threads", sc.solver.threads},
  };
  return root.dump(2) + "\n";
}

Scenario load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ValidationError("cannot open scenario file: " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return scenario_from_json(buf.str());
}

void save_scenario(const Scenario& scenario, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) {
    throw ValidationError("cannot write scenario file: " + path.string());
  }
  out << scenario_to_json(scenario);
}

}  // namespace dockplan
