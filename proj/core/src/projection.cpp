#include "sunlab/projection.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "sunlab/primitive_lp.hpp"

namespace sunlab {

namespace {

Rational eval_segment_norm(const Point& d, const Point& e, const Rational& t, Norm which) {
  Rational out;
  for (int j = 0; j < d.dim(); ++j) {
    Rational v = (d[j] - t * e[j]).abs();
    if (which == Norm::L1)
      out += v;
    else if (out < v)
      out = v;
  }
  return out;
}

}  // namespace

SegmentMin minimize_on_segment(const Point& x, const Point& a, const Point& b, Norm which) {
  require_same_dim(x, a);
  require_same_dim(x, b);
  const Point d = x - a;
  const Point e = b - a;
  const int dim = x.dim();

  std::vector<Rational> cand{Rational(0), Rational(1)};
  if (which == Norm::L1) {
    // kinks of the sum are the per-coordinate apexes
    for (int j = 0; j < dim; ++j)
      if (e[j].sign() != 0) cand.push_back(d[j] / e[j]);
  } else {
    // crossings of the affine pieces s*(d_j - t e_j)
    for (int j = 0; j < dim; ++j)
      for (int k = j; k < dim; ++k)
        for (int sj = -1; sj <= 1; sj += 2)
          for (int sk = -1; sk <= 1; sk += 2) {
            if (j == k && sj == sk) continue;
            Rational den = Rational(sk) * e[k] - Rational(sj) * e[j];
            if (den.sign() == 0) continue;
            cand.push_back((Rational(sk) * d[k] - Rational(sj) * d[j]) / den);
          }
  }
  SegmentMin best;
  bool first = true;
  for (const Rational& t : cand) {
    if (t < Rational(0) || Rational(1) < t) continue;
    Rational v = eval_segment_norm(d, e, t, which);
    if (first || v < best.value) {
      best.value = v;
      best.t_lo = best.t_hi = t;
      first = false;
    } else if (v == best.value) {
      best.t_lo = min(best.t_lo, t);
      best.t_hi = max(best.t_hi, t);
    }
  }
  return best;
}

namespace {

PrimitiveProjection project_point(const SinglePoint& sp, const Point& x, Norm which) {
  PrimitiveProjection out;
  out.dist = distance(x, sp.p, which);
  out.minimizer = sp.p;
  out.is_unique = true;
  out.face_samples = {sp.p};
  return out;
}

PrimitiveProjection project_segment(const Segment& seg, const Point& x, Norm which) {
  auto m = minimize_on_segment(x, seg.a, seg.b, which);
  PrimitiveProjection out;
  out.dist = m.value;
  Point e = seg.b - seg.a;
  Point p_lo = seg.a + m.t_lo * e;
  Point p_hi = seg.a + m.t_hi * e;
  out.is_unique = m.t_lo == m.t_hi;
  out.minimizer = out.is_unique ? p_lo : midpoint(p_lo, p_hi);
  out.face_samples = {out.minimizer};
  if (!out.is_unique) {
    out.face_samples.push_back(p_lo);
    out.face_samples.push_back(p_hi);
  }
  return out;
}

PrimitiveProjection project_box(const AxisBox& box, const Point& x, Norm which) {
  const int dim = x.dim();
  PrimitiveProjection out;
  std::vector<Rational> clamp(dim);
  Rational dist;
  for (int j = 0; j < dim; ++j) {
    clamp[j] = min(max(x[j], box.lo[j]), box.hi[j]);
    Rational over = (x[j] - clamp[j]).abs();
    if (which == Norm::L1)
      dist += over;
    else if (dist < over)
      dist = over;
  }
  out.dist = dist;
  if (which == Norm::L1) {
    out.minimizer = Point(std::move(clamp));
    out.is_unique = true;
    out.face_samples = {out.minimizer};
    return out;
  }
  // linf: the optimal face is box ∩ [x - dist, x + dist]
  Point flo = Point::zero(dim), fhi = Point::zero(dim);
  bool unique = true;
  for (int j = 0; j < dim; ++j) {
    flo[j] = max(box.lo[j], x[j] - dist);
    fhi[j] = min(box.hi[j], x[j] + dist);
    if (flo[j] < fhi[j]) unique = false;
  }
  out.is_unique = unique;
  out.minimizer = midpoint(flo, fhi);
  std::set<Point> seen;
  out.face_samples.push_back(out.minimizer);
  seen.insert(out.minimizer);
  if (!unique) {
    for (const auto& v : primitive_vertices(AxisBox{flo, fhi}))
      if (seen.insert(v).second) out.face_samples.push_back(v);
  }
  return out;
}

PrimitiveProjection project_polytope(const Polytope& poly, const Point& x, Norm which) {
  const int dim = x.dim();
  const int k = static_cast<int>(poly.vertices.size());
  const int n_aux = which == Norm::Linf ? 1 : dim;
  const int total = k + n_aux;
  LpProblem lp(total);
  Primitive prim = poly;
  auto e = embed_primitive(lp, prim, 0);
  std::vector<Rational> obj(total);
  for (int a = 0; a < n_aux; ++a) {
    lp.set_nonnegative(k + a);
    obj[k + a] = 1;
  }
  for (int j = 0; j < dim; ++j) {
    std::vector<Rational> f(dim);
    f[j] = 1;
    Rational c;
    auto row = expand_functional(e, total, f, c);
    int aux = k + (which == Norm::Linf ? 0 : j);
    // x_j - z_j <= aux   and   z_j - x_j <= aux
    auto upper = row;
    upper[aux] += 1;
    lp.add_ge(std::move(upper), x[j] - c);  // z_j + aux >= x_j
    auto lower = row;
    lower[aux] -= 1;
    lp.add_le(std::move(lower), x[j] - c);  // z_j - aux <= x_j
  }
  lp.set_objective(obj);
  auto sol = lp_solve(lp);
  if (!sol.optimal()) throw std::runtime_error("project_polytope: LP failed");

  PrimitiveProjection out;
  out.dist = sol.value;
  Point z0 = embedded_point(e, sol.x);

  // Optimal face: pin the distance, probe coordinate ranges.
  LpProblem pinned = lp;
  pinned.add_eq(obj, sol.value);
  bool unique = true;
  std::vector<Point> samples{z0};
  Point acc = z0;
  int n_acc = 1;
  for (int j = 0; j < dim; ++j) {
    std::vector<Rational> f(dim);
    f[j] = 1;
    Rational c;
    auto row = expand_functional(e, total, f, c);
    auto range = lp_range(pinned, row);
    if (!range.feasible) throw std::runtime_error("project_polytope: pinned LP failed");
    if (range.lo < range.hi) {
      unique = false;
      Point plo = embedded_point(e, range.arg_lo);
      Point phi = embedded_point(e, range.arg_hi);
      samples.push_back(plo);
      samples.push_back(phi);
      acc = acc + plo + phi;
      n_acc += 2;
    }
  }
  out.is_unique = unique;
  if (unique) {
    out.minimizer = z0;
    out.face_samples = {z0};
    return out;
  }
  out.minimizer = Rational(1, n_acc) * acc;  // interior of the face (convexity)
  std::set<Point> seen;
  out.face_samples.push_back(out.minimizer);
  seen.insert(out.minimizer);
  for (auto& s : samples)
    if (seen.insert(s).second) out.face_samples.push_back(std::move(s));
  return out;
}

}  // namespace

PrimitiveProjection project_primitive(const Primitive& prim, const Point& x, Norm which) {
  if (primitive_dim(prim) != x.dim()) throw std::invalid_argument("dimension mismatch");
  if (const auto* sp = std::get_if<SinglePoint>(&prim)) return project_point(*sp, x, which);
  if (const auto* seg = std::get_if<Segment>(&prim)) return project_segment(*seg, x, which);
  if (const auto* box = std::get_if<AxisBox>(&prim)) return project_box(*box, x, which);
  return project_polytope(std::get<Polytope>(prim), x, which);
}

ProjectionResult project(const SetModel& m, const Point& x, Norm which) {
  m.require_dim(x);
  ProjectionResult out;
  out.norm_used = which;
  std::vector<PrimitiveProjection> per(m.primitives().size());
  bool first = true;
  for (size_t i = 0; i < m.primitives().size(); ++i) {
    per[i] = project_primitive(m.primitives()[i], x, which);
    if (first || per[i].dist < out.rho) {
      out.rho = per[i].dist;
      first = false;
    }
  }
  for (size_t i = 0; i < per.size(); ++i) {
    if (!(per[i].dist == out.rho)) continue;
    ProjectionWitness w;
    w.primitive_index = static_cast<int>(i);
    w.minimizer = std::move(per[i].minimizer);
    w.is_unique = per[i].is_unique;
    w.face_samples = std::move(per[i].face_samples);
    out.witnesses.push_back(std::move(w));
  }
  return out;
}

Rational distance_to_set(const SetModel& m, const Point& x, Norm which) {
  return project(m, x, which).rho;
}

std::vector<Point> nearest_point_samples(const ProjectionResult& r) {
  std::vector<Point> out;
  std::set<Point> seen;
  for (const auto& w : r.witnesses)
    for (const auto& s : w.face_samples)
      if (seen.insert(s).second) out.push_back(s);
  return out;
}

}  // namespace sunlab
