#pragma once
//------------------------------------------------------------------------------
// Menger l1-convexity and strict l1-convexity.
//
// A set is l1-convex when between any two of its points some third point of
// the set realizes the l1 triangle equality. It is strictly l1-convex when,
// additionally, any two points differing in every non-frozen coordinate are
// joined by a geodesic polyline whose coordinates move strictly monotonically
// outside eqc(M).
//
// Refutations are exact and carry witnesses; passes over a continuum of
// pairs are necessarily sampled and say so.
//------------------------------------------------------------------------------
#include <optional>
#include <string>
#include <vector>

#include "sunlab/set_model.hpp"

namespace sunlab {

struct GeodesicPath {
  std::vector<Point> waypoints;  // >= 2
  IndexSet strict_indices;

  // Checks all structural invariants; throws std::logic_error on violation.
  void validate() const;
  Rational l1_length() const;
};

enum class VerdictKind { Proven, Refuted, SampledPass };

struct Verdict {
  VerdictKind kind = VerdictKind::SampledPass;
  long pairs_checked = 0;
  Rational resolution;            // finest search density used (0 if n/a)
  std::string detail;             // human-oriented: what the witness shows
  std::vector<std::pair<std::string, Point>> points;      // named witnesses
  std::vector<std::pair<std::string, Rational>> scalars;  // named scalars
  long ff_pairs_seen = 0;  // pairs with all free coordinates distinct

  bool passed() const { return kind != VerdictKind::Refuted; }
};

struct SearchBudget {
  long pair_budget = 200;                 // random pairs beyond vertex pairs
  std::uint64_t seed = 1;
  long sample_count = 48;                 // points from sample_points
  std::vector<Rational> densities = {Rational(1, 2), Rational(1, 4), Rational(1, 8)};
  long max_geodesic_pairs = 120;          // cap on strict-pair searches
};

// Exact: a point z of M strictly between x and y (l1 sense), different from
// both, or proven nonexistence.
std::optional<Point> menger_witness(const SetModel& m, const Point& x, const Point& y);

Verdict is_l1_convex(const SetModel& m, const SearchBudget& budget = {});

// Monotone geodesic from x to y through waypoints of M restricted to the
// coordinate box of (x, y); strictly monotone on `strict`. Absence means
// "not found at these densities", never proven nonexistence.
std::optional<GeodesicPath> monotone_geodesic(const SetModel& m, const Point& x, const Point& y,
                                              const IndexSet& strict, const SearchBudget& budget = {});

Verdict is_strictly_l1_convex(const SetModel& m, const SearchBudget& budget = {});

// A sampled pair with every coordinate distinct, if one is found.
std::optional<std::pair<Point, Point>> find_coordwise_distinct_pair(const SetModel& m,
                                                                    const SearchBudget& budget = {});

// Deterministic pair seeds used by the convexity sweeps: all sample points
// plus, for every pair of primitives, their exact closest pair in l1 (these
// straddle any gap, so disconnected sets always refute on a seeded pair).
std::vector<std::pair<Point, Point>> convexity_pair_seeds(const SetModel& m,
                                                          const SearchBudget& budget);

}  // namespace sunlab
