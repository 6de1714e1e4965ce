#pragma once
#include <initializer_list>
#include <string>
#include <vector>

#include "sunlab/scenario_lab.hpp"
#include "sunlab/set_model.hpp"

namespace sunlab::testing {

inline Point pt(std::initializer_list<long> coords) {
  std::vector<Rational> c;
  for (long v : coords) c.emplace_back(v);
  return Point(std::move(c));
}

inline Point ptr(std::initializer_list<const char*> coords) {
  std::vector<Rational> c;
  for (const char* v : coords) c.push_back(*Rational::parse(v));
  return Point(std::move(c));
}

inline Rational rat(const char* s) { return *Rational::parse(s); }

inline SetModel unit_box3() {
  return SetModel(3, "unit-box", {AxisBox{pt({0, 0, 0}), pt({1, 1, 1})}});
}

inline SetModel main_cross3(long extent = 4) {
  FamilySpec spec;
  spec.family = Family::MainCross;
  spec.extent = Rational(extent);
  return generate(spec, 1);
}

inline SetModel main_cocross3(long extent = 2) {
  FamilySpec spec;
  spec.family = Family::MainCocross;
  spec.extent = Rational(extent);
  return generate(spec, 1);
}

inline SetModel cocross_line4(long extent = 2) {
  FamilySpec spec;
  spec.family = Family::CocrossLine4;
  spec.dim = 4;
  spec.extent = Rational(extent);
  return generate(spec, 1);
}

}  // namespace sunlab::testing
