#pragma once
//------------------------------------------------------------------------------
// Closed bounded sets represented as finite unions of convex primitives:
// points, segments, axis-aligned boxes and polytopes (vertex form). All
// queries are exact; nothing here rounds.
//------------------------------------------------------------------------------
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "sunlab/point.hpp"

namespace sunlab {

struct SinglePoint {
  Point p;
};
struct Segment {
  Point a, b;  // a != b (degenerate segments normalize to SinglePoint)
};
struct AxisBox {
  Point lo, hi;  // lo_j <= hi_j; fewer than 2 extended sides normalizes away
};
struct Polytope {
  std::vector<Point> vertices;  // pairwise distinct; the set is their hull
};

using Primitive = std::variant<SinglePoint, Segment, AxisBox, Polytope>;

int primitive_dim(const Primitive& p);
std::vector<Point> primitive_vertices(const Primitive& p);
void primitive_bounds(const Primitive& p, Point& lo, Point& hi);
bool primitive_contains(const Primitive& p, const Point& q);

// Coordinates on which the primitive is constant, with their values.
std::vector<std::optional<Rational>> primitive_constant_coords(const Primitive& p);

// {t in [0,1] : a + t(b-a) in P} for a != b. Convexity makes this a closed
// rational interval (possibly a single parameter), or nothing.
std::optional<std::pair<Rational, Rational>> primitive_param_interval(const Primitive& p,
                                                                      const Point& a,
                                                                      const Point& b);

// Exact emptiness test for the intersection of two primitives.
bool primitives_intersect(const Primitive& p, const Primitive& q);

struct SampleSpec {
  long count = 64;
  std::uint64_t seed = 1;
};

class SetModel {
 public:
  // Validates and normalizes primitives (degenerate segments/boxes collapse,
  // duplicate polytope vertices drop) and caches the constant-coordinate set.
  SetModel(int dim, std::string name, std::vector<Primitive> primitives);

  int dim() const { return dim_; }
  const std::string& name() const { return name_; }
  const std::vector<Primitive>& primitives() const { return primitives_; }
  const IndexSet& eqc() const { return eqc_; }

  void require_dim(const Point& p) const;

 private:
  int dim_;
  std::string name_;
  std::vector<Primitive> primitives_;
  IndexSet eqc_;
};

bool contains(const SetModel& m, const Point& p);

// True iff the closed segment [a,b] is covered by the union of primitives.
// Decided exactly through interval cover of the parameter line.
bool segment_inside(const SetModel& m, const Point& a, const Point& b);

// Partition of primitive indices; two primitives share a component iff they
// are linked by a chain of pairwise-intersecting primitives. For unions of
// convex primitives meeting primitive-wise this is topological connectivity.
std::vector<std::vector<int>> connected_components(const SetModel& m);

// { j : coordinate j takes one constant value over the whole set }
IndexSet constant_coords(const SetModel& m);

// Deterministic samples: every primitive vertex, then stratified rational
// lattice fill. Every returned point lies in the set.
std::vector<Point> sample_points(const SetModel& m, const SampleSpec& spec);

// Lattice points of primitive #index clipped to box [lo,hi], at grid pitch
// delta relative to the box edges. Used by the geodesic waypoint search.
std::vector<Point> primitive_lattice_points(const SetModel& m, int index, const Point& lo,
                                            const Point& hi, const Rational& delta);

// One exact point of P_i ∩ P_j when nonempty (deterministic), plus the pair
// of closest points when disjoint. Used for component tests and pair seeds.
std::optional<Point> intersection_point(const SetModel& m, int i, int j);
std::pair<Point, Point> closest_pair(const SetModel& m, int i, int j, Norm which);

}  // namespace sunlab
