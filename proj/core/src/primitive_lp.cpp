#include "sunlab/primitive_lp.hpp"

#include <stdexcept>

namespace sunlab {

int primitive_var_count(const Primitive& p) {
  if (std::holds_alternative<SinglePoint>(p)) return 0;
  if (std::holds_alternative<Segment>(p)) return 1;
  if (const auto* box = std::get_if<AxisBox>(&p)) {
    int n = 0;
    for (int j = 0; j < box->lo.dim(); ++j)
      if (box->lo[j] < box->hi[j]) ++n;
    return n;
  }
  return static_cast<int>(std::get<Polytope>(p).vertices.size());
}

PrimitiveEmbedding embed_primitive(LpProblem& lp, const Primitive& p, int var0) {
  PrimitiveEmbedding e;
  e.var0 = var0;
  const int dim = primitive_dim(p);
  e.offset.resize(dim);
  const int nv = lp.n_vars();
  auto unit_row = [&](int var, const Rational& coeff) {
    std::vector<Rational> row(nv);
    row[var] = coeff;
    return row;
  };

  if (const auto* sp = std::get_if<SinglePoint>(&p)) {
    e.n_vars = 0;
    for (int j = 0; j < dim; ++j) e.offset[j] = sp->p[j];
    e.coeff.assign(dim, {});
    return e;
  }
  if (const auto* seg = std::get_if<Segment>(&p)) {
    e.n_vars = 1;
    e.coeff.assign(dim, std::vector<Rational>(1));
    for (int j = 0; j < dim; ++j) {
      e.offset[j] = seg->a[j];
      e.coeff[j][0] = seg->b[j] - seg->a[j];
    }
    lp.add_ge(unit_row(var0, Rational(1)), Rational(0));
    lp.add_le(unit_row(var0, Rational(1)), Rational(1));
    return e;
  }
  if (const auto* box = std::get_if<AxisBox>(&p)) {
    e.n_vars = primitive_var_count(p);
    e.coeff.assign(dim, std::vector<Rational>(e.n_vars));
    int k = 0;
    for (int j = 0; j < dim; ++j) {
      if (box->lo[j] < box->hi[j]) {
        e.offset[j] = box->lo[j];
        e.coeff[j][k] = 1;
        lp.add_ge(unit_row(var0 + k, Rational(1)), Rational(0));
        lp.add_le(unit_row(var0 + k, Rational(1)), box->hi[j] - box->lo[j]);
        ++k;
      } else {
        e.offset[j] = box->lo[j];
      }
    }
    return e;
  }
  const auto& poly = std::get<Polytope>(p);
  const int k = static_cast<int>(poly.vertices.size());
  e.n_vars = k;
  e.coeff.assign(dim, std::vector<Rational>(k));
  for (int j = 0; j < dim; ++j)
    for (int v = 0; v < k; ++v) e.coeff[j][v] = poly.vertices[v][j];
  std::vector<Rational> ones(nv);
  for (int v = 0; v < k; ++v) {
    lp.set_nonnegative(var0 + v);
    ones[var0 + v] = 1;
  }
  lp.add_eq(std::move(ones), Rational(1));
  return e;
}

std::vector<Rational> expand_functional(const PrimitiveEmbedding& e, int total_vars,
                                        const std::vector<Rational>& a, Rational& constant) {
  std::vector<Rational> row(total_vars);
  constant = Rational(0);
  const int dim = static_cast<int>(e.offset.size());
  if (static_cast<int>(a.size()) != dim)
    throw std::invalid_argument("expand_functional: functional width mismatch");
  for (int j = 0; j < dim; ++j) {
    if (a[j].sign() == 0) continue;
    constant += a[j] * e.offset[j];
    for (int k = 0; k < e.n_vars; ++k) row[e.var0 + k] += a[j] * e.coeff[j][k];
  }
  return row;
}

Point embedded_point(const PrimitiveEmbedding& e, const std::vector<Rational>& solution) {
  const int dim = static_cast<int>(e.offset.size());
  std::vector<Rational> c(dim);
  for (int j = 0; j < dim; ++j) {
    c[j] = e.offset[j];
    for (int k = 0; k < e.n_vars; ++k) c[j] += e.coeff[j][k] * solution[e.var0 + k];
  }
  return Point(std::move(c));
}

void constrain_to_box(LpProblem& lp, const PrimitiveEmbedding& e, int total_vars,
                      const Point& lo, const Point& hi) {
  const int dim = static_cast<int>(e.offset.size());
  for (int j = 0; j < dim; ++j) {
    std::vector<Rational> a(dim);
    a[j] = 1;
    Rational c;
    auto row = expand_functional(e, total_vars, a, c);
    lp.add_ge(row, lo[j] - c);
    lp.add_le(std::move(row), hi[j] - c);
  }
}

}  // namespace sunlab
