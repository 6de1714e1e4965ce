#pragma once
//------------------------------------------------------------------------------
// Structural classes of sets in R^n:
//   cross    -- subset of a main cross cr(x) (the n axis lines through x)
//               with no coordinate constant over the set,
//   cocross  -- subset of some c_J(x): coordinates in J frozen, and every
//               point matching x in at least one free coordinate.
// Decision procedures are exact; centers returned are canonical.
//------------------------------------------------------------------------------
#include <optional>

#include "sunlab/set_model.hpp"

namespace sunlab {

struct CocrossWitness {
  Point center;
  IndexSet frozen;  // J = eqc of the set
};

struct Classification {
  IndexSet eqc;
  std::optional<Point> cross_center;
  std::optional<CocrossWitness> cocross;
  std::optional<Point> main_cross_subset_center;  // cr(x) containment, eqc ignored
  int component_count = 0;
  // Only populated for cocrosses in dim 3: the connected-cross criterion.
  std::optional<bool> prop1_expected_strictly_l1_convex;

  bool is_cross() const { return cross_center.has_value(); }
  bool is_cocross() const { return cocross.has_value(); }
};

// Center x with M ⊆ cr(x), requiring eqc(M) = ∅; absent otherwise.
std::optional<Point> is_cross(const SetModel& m);

// Center x with M ⊆ cr(x) (no eqc requirement).
std::optional<Point> main_cross_subset_center(const SetModel& m);

// (center, J) with M ⊆ c_J(x), J = eqc(M), card J <= dim-2; absent otherwise.
std::optional<CocrossWitness> is_cocross(const SetModel& m);

Classification classify(const SetModel& m);

}  // namespace sunlab
