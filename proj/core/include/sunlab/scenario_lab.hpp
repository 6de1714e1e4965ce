#pragma once
//------------------------------------------------------------------------------
// Deterministic scene generators for the structural families under study
// (crosses, cocrosses, boxes, monotone tubes, ...) and the cross-validation
// harness that checks both sides of each characterization on a scene:
//
//   theorem1        strict sun  <->  strictly l1-convex and not a cross (dim 3)
//   theoremA        strict sun  <->  strictly l1-convex and not a cocross
//   berens_hetzelt  sun         <->  l1-convex
//   prop1           strictly l1-convex  <->  connected cross (cocrosses, dim 3)
//------------------------------------------------------------------------------
#include <optional>
#include <string>

#include "sunlab/classification.hpp"
#include "sunlab/config.hpp"
#include "sunlab/sun_checker.hpp"

namespace sunlab {

enum class Family {
  MainCross,      // the n axis segments through the center
  CrossSubset,    // sub-segments of a main cross; optionally disconnected
  MainCocross,    // the n coordinate hyperplane slabs through the center
  CocrossCJ,      // frozen coordinate assembly J, one slab per free coord
  Box,
  MonotoneTube,   // staircase of overlapping boxes, strictly increasing
  CocrossLine4,   // dim 4: 3-slab cocross in the w=0 slice plus the w-axis
  TwoPoints,
  RandomL1Convex  // chain of componentwise-nondecreasing segments
};

const char* family_name(Family f);
std::optional<Family> family_from_name(const std::string& name);

struct FamilySpec {
  Family family = Family::Box;
  int dim = 3;
  Rational extent = Rational(4);
  std::optional<Point> center;          // defaults to the origin
  IndexSet frozen;                      // CocrossCJ
  std::vector<Rational> frozen_values;  // CocrossCJ, aligned with `frozen`
  bool connected = true;                // CrossSubset
  int pieces = 4;                       // MonotoneTube / RandomL1Convex
  bool strict_steps = false;            // RandomL1Convex: every coordinate moves
  std::optional<Point> box_lo, box_hi;  // Box: explicit corners (else seeded)
};

SetModel generate(const FamilySpec& spec, std::uint64_t seed);

struct ScenarioReport {
  std::string scene;
  int dim = 3;
  std::uint64_t seed = 0;
  Config config;
  Classification classification;
  Verdict l1_convex;
  Verdict strictly_l1_convex;
  Verdict sun_verdict;
  Verdict strict_sun_verdict;
  long cone_holds_but_not_solar = 0;
  long sphere_segment_cases = 0;
  bool sphere_segments_ok = true;
  std::optional<std::pair<Point, Point>> distinct_pair;
  double elapsed_seconds = 0.0;

  // Agreements are always recomputed from the stored verdicts
  // ("pass" means SampledPass/Proven, "fail" means Refuted).
  bool agree_theorem1() const;  // meaningful for dim 3
  bool agree_theoremA() const;
  bool agree_berens_hetzelt() const;
  std::optional<bool> agree_prop1() const;
  bool all_agree() const;
};

// Runs every check on the scene. The heavy sweeps share sample sets.
ScenarioReport validate_scene(const SetModel& m, const Config& cfg);

// Single-theorem wrappers over validate_scene (same shape, lighter surface).
ScenarioReport validate_theorem1(const SetModel& m, const Config& cfg);
ScenarioReport validate_theoremA(const SetModel& m, const Config& cfg);
ScenarioReport validate_bh(const SetModel& m, const Config& cfg);
ScenarioReport validate_prop1(const SetModel& m, const Config& cfg);

// The standard suite roster: deterministic family/seed grid used by the
// `suite` command and the acceptance run.
struct SuiteEntry {
  FamilySpec spec;
  std::uint64_t seed;
};
std::vector<SuiteEntry> suite_roster(std::uint64_t base_seed);

struct SuiteReport {
  Config config;
  std::vector<ScenarioReport> scenes;
  bool all_agree() const;
};

SuiteReport run_suite(const Config& cfg);

}  // namespace sunlab
