#include "sunlab/set_model.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "sunlab/primitive_lp.hpp"
#include "sunlab/rng.hpp"

namespace sunlab {

int primitive_dim(const Primitive& p) {
  return std::visit(
      [](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, SinglePoint>) return v.p.dim();
        if constexpr (std::is_same_v<T, Segment>) return v.a.dim();
        if constexpr (std::is_same_v<T, AxisBox>) return v.lo.dim();
        if constexpr (std::is_same_v<T, Polytope>) {
          if (v.vertices.empty())
            throw std::invalid_argument("Polytope: needs at least one vertex");
          return v.vertices.front().dim();
        }
      },
      p);
}

std::vector<Point> primitive_vertices(const Primitive& p) {
  if (const auto* sp = std::get_if<SinglePoint>(&p)) return {sp->p};
  if (const auto* seg = std::get_if<Segment>(&p)) return {seg->a, seg->b};
  if (const auto* poly = std::get_if<Polytope>(&p)) return poly->vertices;
  const auto& box = std::get<AxisBox>(p);
  const int dim = box.lo.dim();
  std::vector<int> extended;
  for (int j = 0; j < dim; ++j)
    if (box.lo[j] < box.hi[j]) extended.push_back(j);
  std::vector<Point> out;
  out.reserve(1u << extended.size());
  for (unsigned mask = 0; mask < (1u << extended.size()); ++mask) {
    Point v = box.lo;
    for (size_t k = 0; k < extended.size(); ++k)
      if ((mask >> k) & 1u) v[extended[k]] = box.hi[extended[k]];
    out.push_back(std::move(v));
  }
  return out;
}

void primitive_bounds(const Primitive& p, Point& lo, Point& hi) {
  if (const auto* box = std::get_if<AxisBox>(&p)) {
    lo = box->lo;
    hi = box->hi;
    return;
  }
  auto verts = primitive_vertices(p);
  lo = hi = verts.front();
  for (const auto& v : verts) {
    lo = coordinate_min(lo, v);
    hi = coordinate_max(hi, v);
  }
}

bool primitive_contains(const Primitive& p, const Point& q) {
  if (const auto* sp = std::get_if<SinglePoint>(&p)) return sp->p == q;
  if (const auto* seg = std::get_if<Segment>(&p)) {
    // q = a + t(b-a) for one t in [0,1]
    const int dim = q.dim();
    std::optional<Rational> t;
    for (int j = 0; j < dim; ++j) {
      Rational e = seg->b[j] - seg->a[j];
      if (e.sign() == 0) {
        if (!(q[j] == seg->a[j])) return false;
      } else {
        Rational tj = (q[j] - seg->a[j]) / e;
        if (t && !(*t == tj)) return false;
        t = tj;
      }
    }
    return t && !(*t < Rational(0)) && !(Rational(1) < *t);
  }
  if (const auto* box = std::get_if<AxisBox>(&p)) {
    for (int j = 0; j < q.dim(); ++j)
      if (q[j] < box->lo[j] || box->hi[j] < q[j]) return false;
    return true;
  }
  // Polytope: barycentric feasibility.
  const int nv = primitive_var_count(p);
  LpProblem lp(nv);
  auto e = embed_primitive(lp, p, 0);
  for (int j = 0; j < q.dim(); ++j) {
    std::vector<Rational> a(q.dim());
    a[j] = 1;
    Rational c;
    auto row = expand_functional(e, nv, a, c);
    lp.add_eq(std::move(row), q[j] - c);
  }
  return lp_solve(lp).optimal();
}

std::vector<std::optional<Rational>> primitive_constant_coords(const Primitive& p) {
  auto verts = primitive_vertices(p);
  const int dim = verts.front().dim();
  std::vector<std::optional<Rational>> out(dim);
  for (int j = 0; j < dim; ++j) {
    bool constant = true;
    for (const auto& v : verts)
      if (!(v[j] == verts.front()[j])) {
        constant = false;
        break;
      }
    if (constant) out[j] = verts.front()[j];
  }
  return out;
}

std::optional<std::pair<Rational, Rational>> primitive_param_interval(const Primitive& p,
                                                                      const Point& a,
                                                                      const Point& b) {
  const int dim = a.dim();
  if (const auto* sp = std::get_if<SinglePoint>(&p)) {
    // t with a + t(b-a) = q, intersected with [0,1]
    const Point& q = sp->p;
    std::optional<Rational> t;
    for (int j = 0; j < dim; ++j) {
      Rational e = b[j] - a[j];
      if (e.sign() == 0) {
        if (!(q[j] == a[j])) return std::nullopt;
      } else {
        Rational tj = (q[j] - a[j]) / e;
        if (t && !(*t == tj)) return std::nullopt;
        t = tj;
      }
    }
    if (!t || *t < Rational(0) || Rational(1) < *t) return std::nullopt;
    return std::make_pair(*t, *t);
  }
  if (const auto* box = std::get_if<AxisBox>(&p)) {
    // exact axis clipping
    Rational tlo(0), thi(1);
    for (int j = 0; j < dim; ++j) {
      Rational e = b[j] - a[j];
      if (e.sign() == 0) {
        if (a[j] < box->lo[j] || box->hi[j] < a[j]) return std::nullopt;
        continue;
      }
      Rational t0 = (box->lo[j] - a[j]) / e;
      Rational t1 = (box->hi[j] - a[j]) / e;
      if (t1 < t0) std::swap(t0, t1);
      tlo = max(tlo, t0);
      thi = min(thi, t1);
    }
    if (thi < tlo) return std::nullopt;
    return std::make_pair(tlo, thi);
  }
  // Segment / Polytope: exact min/max of t over the joint system.
  const int pv = primitive_var_count(p);
  LpProblem lp(1 + pv);  // var 0: t
  auto e = embed_primitive(lp, p, 1);
  std::vector<Rational> trow(1 + pv);
  trow[0] = 1;
  lp.add_ge(trow, Rational(0));
  lp.add_le(trow, Rational(1));
  for (int j = 0; j < dim; ++j) {
    std::vector<Rational> f(dim);
    f[j] = 1;
    Rational c;
    auto row = expand_functional(e, 1 + pv, f, c);
    row[0] -= b[j] - a[j];  // z_j - t*(b-a)_j = a_j
    lp.add_eq(std::move(row), a[j] - c);
  }
  auto range = lp_range(lp, trow);
  if (!range.feasible) return std::nullopt;
  return std::make_pair(range.lo, range.hi);
}

bool primitives_intersect(const Primitive& p, const Primitive& q) {
  if (const auto* sp = std::get_if<SinglePoint>(&p)) return primitive_contains(q, sp->p);
  if (const auto* sq = std::get_if<SinglePoint>(&q)) return primitive_contains(p, sq->p);
  const int dim = primitive_dim(p);
  const int np = primitive_var_count(p), nq = primitive_var_count(q);
  LpProblem lp(np + nq);
  auto ep = embed_primitive(lp, p, 0);
  auto eq = embed_primitive(lp, q, np);
  for (int j = 0; j < dim; ++j) {
    std::vector<Rational> f(dim);
    f[j] = 1;
    Rational cp, cq;
    auto rp = expand_functional(ep, np + nq, f, cp);
    auto rq = expand_functional(eq, np + nq, f, cq);
    for (int k = 0; k < np + nq; ++k) rp[k] -= rq[k];
    lp.add_eq(std::move(rp), cq - cp);
  }
  return lp_solve(lp).optimal();
}

SetModel::SetModel(int dim, std::string name, std::vector<Primitive> primitives)
    : dim_(dim), name_(std::move(name)) {
  if (dim < kMinDim || dim > kMaxDim) throw std::invalid_argument("SetModel: dim must be in {2,3,4}");
  if (primitives.empty()) throw std::invalid_argument("SetModel: set must be nonempty");
  for (auto& p : primitives) {
    if (primitive_dim(p) != dim) throw std::invalid_argument("SetModel: primitive dimension mismatch");
    // normalize
    if (auto* seg = std::get_if<Segment>(&p)) {
      if (seg->a == seg->b) p = SinglePoint{seg->a};
    } else if (auto* box = std::get_if<AxisBox>(&p)) {
      int extended = 0;
      std::optional<int> axis;
      for (int j = 0; j < dim; ++j) {
        if (box->hi[j] < box->lo[j]) throw std::invalid_argument("SetModel: box with lo > hi");
        if (box->lo[j] < box->hi[j]) {
          ++extended;
          axis = j;
        }
      }
      if (extended == 0) {
        p = SinglePoint{box->lo};
      } else if (extended == 1) {
        Point b = box->lo;
        b[*axis] = box->hi[*axis];
        p = Segment{box->lo, b};
      }
    } else if (auto* poly = std::get_if<Polytope>(&p)) {
      if (poly->vertices.empty()) throw std::invalid_argument("SetModel: polytope needs vertices");
      std::vector<Point> verts;
      for (const auto& v : poly->vertices)
        if (std::find(verts.begin(), verts.end(), v) == verts.end()) verts.push_back(v);
      if (verts.size() == 1)
        p = SinglePoint{verts.front()};
      else
        poly->vertices = std::move(verts);
    }
    primitives_.push_back(std::move(p));
  }
  eqc_ = constant_coords(*this);
}

void SetModel::require_dim(const Point& p) const {
  if (p.dim() != dim_) throw std::invalid_argument("dimension mismatch");
}

bool contains(const SetModel& m, const Point& p) {
  m.require_dim(p);
  for (const auto& prim : m.primitives())
    if (primitive_contains(prim, p)) return true;
  return false;
}

bool segment_inside(const SetModel& m, const Point& a, const Point& b) {
  m.require_dim(a);
  m.require_dim(b);
  if (a == b) return contains(m, a);
  std::vector<std::pair<Rational, Rational>> intervals;
  for (const auto& prim : m.primitives())
    if (auto iv = primitive_param_interval(prim, a, b)) intervals.push_back(*iv);
  std::sort(intervals.begin(), intervals.end());
  // Greedy closed-interval cover of [0,1].
  Rational cur(0);
  size_t i = 0;
  bool covered_start = false;
  while (true) {
    Rational reach = cur;
    bool touched = false;
    for (; i < intervals.size() && !(cur < intervals[i].first); ++i) {
      touched = true;
      reach = max(reach, intervals[i].second);
    }
    // Points behind i can still touch cur (sorted by lower end only).
    // The loop above consumed everything with lo <= cur; nothing later helps.
    if (!covered_start) {
      if (!touched) return false;  // parameter 0 not covered
      covered_start = true;
    }
    if (!(cur < Rational(1))) return true;
    if (!(cur < reach)) return false;  // gap right after cur
    cur = reach;
  }
}

std::vector<std::vector<int>> connected_components(const SetModel& m) {
  const int n = static_cast<int>(m.primitives().size());
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (find(i) == find(j)) continue;
      if (primitives_intersect(m.primitives()[i], m.primitives()[j]))
        parent[find(i)] = find(j);
    }
  std::map<int, std::vector<int>> groups;
  for (int i = 0; i < n; ++i) groups[find(i)].push_back(i);
  std::vector<std::vector<int>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return out;
}

IndexSet constant_coords(const SetModel& m) {
  IndexSet out;
  const int dim = m.dim();
  for (int j = 0; j < dim; ++j) {
    std::optional<Rational> value;
    bool constant = true;
    for (const auto& prim : m.primitives()) {
      auto consts = primitive_constant_coords(prim);
      if (!consts[j]) {
        constant = false;
        break;
      }
      if (value && !(*value == *consts[j])) {
        constant = false;
        break;
      }
      value = consts[j];
    }
    if (constant) out.add(j);
  }
  return out;
}

namespace {

Point sample_in_primitive(const Primitive& prim, Rng& rng, int bits) {
  if (const auto* sp = std::get_if<SinglePoint>(&prim)) return sp->p;
  if (const auto* seg = std::get_if<Segment>(&prim)) {
    Rational t = rng.unit_fraction(bits);
    return seg->a + t * (seg->b - seg->a);
  }
  if (const auto* box = std::get_if<AxisBox>(&prim)) {
    std::vector<Rational> c(box->lo.dim());
    for (int j = 0; j < box->lo.dim(); ++j) c[j] = rng.between(box->lo[j], box->hi[j], bits);
    return Point(std::move(c));
  }
  const auto& poly = std::get<Polytope>(prim);
  // rational barycentric weights
  std::vector<Rational> w(poly.vertices.size());
  Rational total;
  for (auto& wi : w) {
    wi = Rational(static_cast<long>(rng.below(8)) + 1, 1);
    total += wi;
  }
  Point out = Point::zero(poly.vertices.front().dim());
  for (size_t k = 0; k < w.size(); ++k) out = out + (w[k] / total) * poly.vertices[k];
  return out;
}

}  // namespace

std::vector<Point> sample_points(const SetModel& m, const SampleSpec& spec) {
  if (spec.count < 1) throw std::invalid_argument("sample_points: count must be >= 1");
  std::vector<Point> out;
  std::set<Point> seen;
  auto push = [&](const Point& p) {
    if (seen.insert(p).second) out.push_back(p);
  };
  for (const auto& prim : m.primitives())
    for (const auto& v : primitive_vertices(prim)) push(v);
  Rng rng(spec.seed);
  const int n = static_cast<int>(m.primitives().size());
  long attempts = 0;
  while (static_cast<long>(out.size()) < spec.count && attempts < 8 * spec.count) {
    const auto& prim = m.primitives()[static_cast<int>(attempts) % n];
    push(sample_in_primitive(prim, rng, 4));
    ++attempts;
  }
  return out;
}

std::vector<Point> primitive_lattice_points(const SetModel& m, int index, const Point& lo,
                                            const Point& hi, const Rational& delta) {
  const auto& prim = m.primitives()[index];
  const int dim = m.dim();
  std::vector<Point> out;
  std::set<Point> seen;
  auto push = [&](const Point& p) {
    for (int j = 0; j < dim; ++j)
      if (p[j] < lo[j] || hi[j] < p[j]) return;
    if (seen.insert(p).second) out.push_back(p);
  };
  // grid values per coordinate: lo_j + k*delta*(hi_j - lo_j)
  auto grid_values = [&](int j) {
    std::vector<Rational> vals;
    Rational step = delta * (hi[j] - lo[j]);
    if (step.sign() == 0) {
      vals.push_back(lo[j]);
      return vals;
    }
    for (Rational v = lo[j]; !(hi[j] < v); v += step) vals.push_back(v);
    if (!(vals.back() == hi[j])) vals.push_back(hi[j]);
    return vals;
  };

  if (const auto* sp = std::get_if<SinglePoint>(&prim)) {
    push(sp->p);
    return out;
  }
  if (const auto* seg = std::get_if<Segment>(&prim)) {
    // Clip the segment to the box through its own parameterization.
    auto clip = primitive_param_interval(AxisBox{lo, hi}, seg->a, seg->b);
    if (!clip) return out;
    auto [t0, t1] = *clip;
    push(seg->a + t0 * (seg->b - seg->a));
    push(seg->a + t1 * (seg->b - seg->a));
    // parameters where some coordinate crosses a grid plane
    for (int j = 0; j < dim; ++j) {
      Rational e = seg->b[j] - seg->a[j];
      if (e.sign() == 0) continue;
      for (const Rational& g : grid_values(j)) {
        Rational t = (g - seg->a[j]) / e;
        if (t < t0 || t1 < t) continue;
        push(seg->a + t * (seg->b - seg->a));
      }
    }
    return out;
  }
  if (const auto* box = std::get_if<AxisBox>(&prim)) {
    // product of per-coordinate grids clipped to the primitive
    std::vector<std::vector<Rational>> vals(dim);
    for (int j = 0; j < dim; ++j) {
      std::vector<Rational> vj;
      for (const Rational& g : grid_values(j))
        if (!(g < box->lo[j]) && !(box->hi[j] < g)) vj.push_back(g);
      // keep clamped endpoints so thin boxes are not missed
      vj.push_back(max(box->lo[j], lo[j]));
      vj.push_back(min(box->hi[j], hi[j]));
      std::sort(vj.begin(), vj.end());
      vj.erase(std::unique(vj.begin(), vj.end()), vj.end());
      if (vj.empty() || vj.back() < vj.front()) return out;
      vals[j] = std::move(vj);
    }
    std::vector<size_t> idx(dim, 0);
    while (true) {
      std::vector<Rational> c(dim);
      for (int j = 0; j < dim; ++j) c[j] = vals[j][idx[j]];
      Point p(std::move(c));
      if (primitive_contains(prim, p)) push(p);
      int j = dim - 1;
      while (j >= 0 && ++idx[j] == vals[j].size()) idx[j--] = 0;
      if (j < 0) break;
    }
    return out;
  }
  // Polytope: vertices clipped to box, plus pairwise midpoints and centroid.
  const auto& poly = std::get<Polytope>(prim);
  for (const auto& v : poly.vertices) push(v);
  for (size_t i = 0; i < poly.vertices.size(); ++i)
    for (size_t j = i + 1; j < poly.vertices.size(); ++j)
      push(midpoint(poly.vertices[i], poly.vertices[j]));
  Point centroid = Point::zero(dim);
  for (const auto& v : poly.vertices)
    centroid = centroid + Rational(1, static_cast<long>(poly.vertices.size())) * v;
  push(centroid);
  return out;
}

std::optional<Point> intersection_point(const SetModel& m, int i, int j) {
  const auto& p = m.primitives()[i];
  const auto& q = m.primitives()[j];
  if (const auto* sp = std::get_if<SinglePoint>(&p))
    return primitive_contains(q, sp->p) ? std::optional<Point>(sp->p) : std::nullopt;
  if (const auto* sq = std::get_if<SinglePoint>(&q))
    return primitive_contains(p, sq->p) ? std::optional<Point>(sq->p) : std::nullopt;
  const int dim = m.dim();
  const int np = primitive_var_count(p), nq = primitive_var_count(q);
  LpProblem lp(np + nq);
  auto ep = embed_primitive(lp, p, 0);
  auto eq = embed_primitive(lp, q, np);
  for (int d = 0; d < dim; ++d) {
    std::vector<Rational> f(dim);
    f[d] = 1;
    Rational cp, cq;
    auto rp = expand_functional(ep, np + nq, f, cp);
    auto rq = expand_functional(eq, np + nq, f, cq);
    for (int k = 0; k < np + nq; ++k) rp[k] -= rq[k];
    lp.add_eq(std::move(rp), cq - cp);
  }
  auto sol = lp_solve(lp);
  if (!sol.optimal()) return std::nullopt;
  return embedded_point(ep, sol.x);
}

std::pair<Point, Point> closest_pair(const SetModel& m, int i, int j, Norm which) {
  const auto& p = m.primitives()[i];
  const auto& q = m.primitives()[j];
  const int dim = m.dim();
  const int np = primitive_var_count(p), nq = primitive_var_count(q);
  const int n_aux = which == Norm::Linf ? 1 : dim;
  const int total = np + nq + n_aux;
  LpProblem lp(total);
  auto ep = embed_primitive(lp, p, 0);
  auto eq = embed_primitive(lp, q, np);
  std::vector<Rational> obj(total);
  for (int a = 0; a < n_aux; ++a) {
    lp.set_nonnegative(np + nq + a);
    obj[np + nq + a] = 1;
  }
  for (int d = 0; d < dim; ++d) {
    std::vector<Rational> f(dim);
    f[d] = 1;
    Rational cp, cq;
    auto rp = expand_functional(ep, total, f, cp);
    auto rq = expand_functional(eq, total, f, cq);
    std::vector<Rational> diff(total);
    for (int k = 0; k < total; ++k) diff[k] = rp[k] - rq[k];
    int aux = np + nq + (which == Norm::Linf ? 0 : d);
    auto upper = diff;
    upper[aux] -= 1;  // p_d - q_d - aux <= cq - cp
    lp.add_le(std::move(upper), cq - cp);
    auto lower = diff;
    lower[aux] += 1;  // p_d - q_d + aux >= cq - cp
    lp.add_ge(std::move(lower), cq - cp);
  }
  lp.set_objective(std::move(obj));
  auto sol = lp_solve(lp);
  if (!sol.optimal()) throw std::runtime_error("closest_pair: LP unexpectedly failed");
  return {embedded_point(ep, sol.x), embedded_point(eq, sol.x)};
}

}  // namespace sunlab
