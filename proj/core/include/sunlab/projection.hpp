#pragma once
//------------------------------------------------------------------------------
// Exact metric projection onto unions of convex primitives, under the linf
// norm (the ambient norm here) and l1 (used by cross-check oracles only).
// Nearest-point sets can be whole faces; each witness carries an exact
// canonical minimizer, a uniqueness flag, and face samples (vertices plus
// midpoint of the optimal face) for downstream quantification.
//------------------------------------------------------------------------------
#include <vector>

#include "sunlab/set_model.hpp"

namespace sunlab {

struct PrimitiveProjection {
  Rational dist;
  Point minimizer;  // canonical: center/midpoint of the optimal face
  bool is_unique = true;
  std::vector<Point> face_samples;  // includes minimizer
};

struct ProjectionWitness {
  int primitive_index = -1;
  Point minimizer;
  bool is_unique = true;
  std::vector<Point> face_samples;
};

struct ProjectionResult {
  Rational rho;
  std::vector<ProjectionWitness> witnesses;  // one per primitive attaining rho
  Norm norm_used = Norm::Linf;
};

PrimitiveProjection project_primitive(const Primitive& prim, const Point& x, Norm which);

ProjectionResult project(const SetModel& m, const Point& x, Norm which = Norm::Linf);

Rational distance_to_set(const SetModel& m, const Point& x, Norm which = Norm::Linf);

// All face samples of all witnesses, deduplicated, canonical order.
std::vector<Point> nearest_point_samples(const ProjectionResult& r);

// Exact minimum of t -> norm(x - (a + t (b - a))) over t in [0,1], with the
// closed interval of minimizing parameters. Piecewise-linear convex, solved
// over its rational breakpoints.
struct SegmentMin {
  Rational value;
  Rational t_lo, t_hi;
};
SegmentMin minimize_on_segment(const Point& x, const Point& a, const Point& b, Norm which);

}  // namespace sunlab
