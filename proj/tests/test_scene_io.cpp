#include <doctest.h>

#include "sunlab/scene_io.hpp"
#include "test_util.hpp"

using namespace sunlab;
using namespace sunlab::testing;

TEST_CASE("scene json round trip is byte identical") {
  for (const SetModel& m : {main_cross3(), main_cocross3(), unit_box3(), cocross_line4()}) {
    std::string text = scene_to_json(m);
    SetModel back = scene_from_json(text);
    CHECK(scene_to_json(back) == text);
    CHECK(back.dim() == m.dim());
    CHECK(back.primitives().size() == m.primitives().size());
  }
}

TEST_CASE("all primitive kinds and rational coordinates survive the trip") {
  SetModel m(3, "mixed",
             {SinglePoint{ptr({"-3/2", "0", "7"})},
              Segment{pt({0, 0, 0}), ptr({"1/3", "1", "0"})},
              AxisBox{ptr({"-1", "-1/2", "0"}), ptr({"1", "1/2", "2"})},
              Polytope{{pt({0, 0, 0}), pt({1, 0, 0}), ptr({"0", "1/2", "1"})}}});
  SetModel back = scene_from_json(scene_to_json(m));
  CHECK(scene_to_json(back) == scene_to_json(m));
  CHECK(contains(back, ptr({"-3/2", "0", "7"})));
}

TEST_CASE("malformed scenes are rejected") {
  CHECK_THROWS(scene_from_json("{"));
  CHECK_THROWS_AS(scene_from_json(R"({"dim":3,"name":"x","primitives":[]})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      scene_from_json(
          R"({"dim":3,"name":"x","primitives":[{"type":"point","coords":["0","0","1.5"]}]})"),
      std::invalid_argument);
  CHECK_THROWS_AS(
      scene_from_json(
          R"({"dim":3,"name":"x","primitives":[{"type":"blob","coords":["0","0","0"]}]})"),
      std::invalid_argument);
  // dimension mismatch between dim and coords
  CHECK_THROWS_AS(
      scene_from_json(
          R"({"dim":3,"name":"x","primitives":[{"type":"point","coords":["0","0"]}]})"),
      std::invalid_argument);
  // unsupported dimension
  CHECK_THROWS_AS(
      scene_from_json(
          R"({"dim":5,"name":"x","primitives":[{"type":"point","coords":["0","0","0","0","0"]}]})"),
      std::invalid_argument);
  // inverted box corners
  CHECK_THROWS_AS(
      scene_from_json(
          R"({"dim":3,"name":"x","primitives":[{"type":"box","lo":["1","0","0"],"hi":["0","1","1"]}]})"),
      std::invalid_argument);
  // polytope without vertices
  CHECK_THROWS_AS(
      scene_from_json(R"({"dim":3,"name":"x","primitives":[{"type":"polytope","vertices":[]}]})"),
      std::invalid_argument);
  // zero denominator in a coordinate
  CHECK_THROWS_AS(
      scene_from_json(
          R"({"dim":3,"name":"x","primitives":[{"type":"point","coords":["1/0","0","0"]}]})"),
      std::invalid_argument);
}

TEST_CASE("point literals") {
  CHECK(parse_point_literal("1,1,0") == pt({1, 1, 0}));
  CHECK(parse_point_literal(" -3/2 , 0, 1/4 ") == ptr({"-3/2", "0", "1/4"}));
  CHECK_THROWS_AS(parse_point_literal("1,,2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_point_literal("a,b,c"), std::invalid_argument);
}

TEST_CASE("report json carries the pinned top-level schema") {
  Config cfg;
  cfg.sweep_budget = 8;
  auto rep = validate_scene(unit_box3(), cfg);
  std::string text = report_to_json(rep);
  for (const char* key :
       {"\"scene\"", "\"seed\"", "\"verdicts\"", "\"agreements\"", "\"witnesses\"", "\"config\""})
    CHECK(text.find(key) != std::string::npos);
  CHECK(text.find("\"timings\"") == std::string::npos);
  CHECK(report_to_json(rep, true).find("\"timings\"") != std::string::npos);
}
