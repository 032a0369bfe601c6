#pragma once

#include <string>

#include "dynacon/world.hpp"

namespace dynacon {

// Parses a UTF-8 JSON scenario file and validates every type invariant.
ScenarioSpec load_scenario(const std::string& path);

ScenarioSpec parse_scenario_json(const std::string& text, const std::string& origin = "<string>");

// Deterministic serialization; save then load yields a structurally identical spec.
std::string scenario_to_json(const ScenarioSpec& spec);
void save_scenario(const ScenarioSpec& spec, const std::string& path);

} // namespace dynacon
