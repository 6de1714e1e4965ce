#pragma once
//------------------------------------------------------------------------------
// Scene and report serialization. Scenes are self-describing JSON with all
// numbers as exact rational strings ("p/q", "/q" omitted for integers);
// load -> save round-trips byte-identically (canonical rendering, sorted
// keys). Reports carry verdicts with their full witnesses.
//------------------------------------------------------------------------------
#include <string>

#include "sunlab/scenario_lab.hpp"
#include "sunlab/set_model.hpp"

namespace sunlab {

std::string scene_to_json(const SetModel& m);
SetModel scene_from_json(const std::string& text);

SetModel load_scene(const std::string& path);
void save_scene(const SetModel& m, const std::string& path);

// { "scene", "seed", "verdicts", "agreements", "witnesses", "config" }.
// Timings are excluded unless requested: report bytes are deterministic for
// a fixed (scene, seed, config).
std::string report_to_json(const ScenarioReport& rep, bool include_timings = false);
std::string suite_report_to_json(const SuiteReport& rep, bool include_timings = false);

// Point literal for CLI flags: comma-separated rationals, e.g. "1,1/2,0".
Point parse_point_literal(const std::string& text);

}  // namespace sunlab
