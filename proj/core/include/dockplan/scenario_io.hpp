#pragma once

#include <filesystem>
#include <string>

#include "dockplan/types.hpp"

namespace dockplan {

/// Parses and fully validates a scenario file (JSON; lengths in meters,
/// speeds in m/s, angles in degrees under `_deg` keys). Optional sections
/// receive documented defaults. Throws ValidationError for both parse and
/// invariant failures, naming the problem.
Scenario load_scenario(const std::filesystem::path& path);

/// Writes the scenario with every field explicit, so that loading the file
/// back reproduces the scenario bit-identically.
void save_scenario(const Scenario& scenario, const std::filesystem::path& path);

Scenario scenario_from_json(const std::string& text);
std::string scenario_to_json(const Scenario& scenario);

}  // namespace dockplan
