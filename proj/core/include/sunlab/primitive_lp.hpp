#pragma once
// Affine embedding of convex primitives into LP variable space. A primitive
// becomes a block of variables plus internal constraints; its point is an
// affine function of the block. Call sites combine blocks to pose exact
// feasibility/optimization problems about one or two primitives.
#include <vector>

#include "sunlab/lp.hpp"
#include "sunlab/set_model.hpp"

namespace sunlab {

struct PrimitiveEmbedding {
  int var0 = 0;
  int n_vars = 0;
  std::vector<Rational> offset;              // dim
  std::vector<std::vector<Rational>> coeff;  // dim x n_vars
};

// Variables the primitive needs: point 0, segment 1, box = extended sides,
// polytope = vertex count (barycentric weights).
int primitive_var_count(const Primitive& p);

// Adds the block's internal constraints to lp and returns the embedding.
PrimitiveEmbedding embed_primitive(LpProblem& lp, const Primitive& p, int var0);

// LP row (length total_vars) for the functional a.z over the embedded point;
// the constant part a.offset is returned through `constant`.
std::vector<Rational> expand_functional(const PrimitiveEmbedding& e, int total_vars,
                                        const std::vector<Rational>& a, Rational& constant);

Point embedded_point(const PrimitiveEmbedding& e, const std::vector<Rational>& solution);

// Constrain the embedded point to the axis box [lo, hi].
void constrain_to_box(LpProblem& lp, const PrimitiveEmbedding& e, int total_vars,
                      const Point& lo, const Point& hi);

}  // namespace sunlab
