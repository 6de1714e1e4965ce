#include "sunlab/classification.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace sunlab {

namespace {

// Effective shape of a primitive: a single point, an axis-parallel segment
// (axis + carrier), or something of affine dimension >= 2 (which can never
// sit inside a union of lines).
struct EffectiveShape {
  enum Kind { KPoint, KAxisSegment, KHigher } kind;
  Point rep;   // the point, or segment endpoint a
  Point rep2;  // segment endpoint b
  int axis = -1;
};

EffectiveShape effective_shape(const Primitive& prim) {
  auto verts = primitive_vertices(prim);
  const int dim = verts.front().dim();
  // distinct vertices?
  std::vector<Point> distinct;
  for (const auto& v : verts)
    if (std::find(distinct.begin(), distinct.end(), v) == distinct.end()) distinct.push_back(v);
  if (distinct.size() == 1) return {EffectiveShape::KPoint, distinct[0], distinct[0], -1};
  // collinear along an axis?  (non-axis lines can't sit in a main cross
  // unless degenerate, and a 2+-dimensional hull never can)
  const Point& p0 = distinct[0];
  int axis = -1;
  bool axis_line = true;
  for (const auto& v : distinct) {
    int diff_at = -1;
    int diffs = 0;
    for (int j = 0; j < dim; ++j)
      if (!(v[j] == p0[j])) {
        ++diffs;
        diff_at = j;
      }
    if (diffs == 0) continue;
    if (diffs > 1) {
      axis_line = false;
      break;
    }
    if (axis >= 0 && diff_at != axis) {
      axis_line = false;
      break;
    }
    axis = diff_at;
  }
  if (!axis_line) return {EffectiveShape::KHigher, p0, p0, -1};
  // endpoints: extreme along the axis
  Point lo = distinct[0], hi = distinct[0];
  for (const auto& v : distinct) {
    if (v[axis] < lo[axis]) lo = v;
    if (hi[axis] < v[axis]) hi = v;
  }
  return {EffectiveShape::KAxisSegment, lo, hi, axis};
}

bool point_in_main_cross(const Point& p, const Point& center) {
  int diffs = 0;
  for (int j = 0; j < p.dim(); ++j)
    if (!(p[j] == center[j])) ++diffs;
  return diffs <= 1;
}

bool shape_in_main_cross(const EffectiveShape& s, const Point& center) {
  if (s.kind == EffectiveShape::KPoint) return point_in_main_cross(s.rep, center);
  // axis segment: carrier line must pass through the center unless the
  // segment collapses to at most one off-line point (it cannot: >=2 points)
  for (int j = 0; j < center.dim(); ++j) {
    if (j == s.axis) continue;
    if (!(s.rep[j] == center[j])) return false;
  }
  return true;
}

std::optional<Point> find_main_cross_center(const SetModel& m,
                                            const std::vector<EffectiveShape>& shapes) {
  const int dim = m.dim();
  // Two segments with different axes pin the center completely.
  const EffectiveShape* first_seg = nullptr;
  for (const auto& s : shapes) {
    if (s.kind != EffectiveShape::KAxisSegment) continue;
    if (!first_seg) {
      first_seg = &s;
      continue;
    }
    if (s.axis == first_seg->axis) continue;
    Point center = first_seg->rep;
    center[first_seg->axis] = s.rep[first_seg->axis];
    for (const auto& t : shapes)
      if (!shape_in_main_cross(t, center)) return std::nullopt;
    return center;
  }
  // All segments share one axis (or there are none): exhaust candidate
  // coordinates observed in the primitives, plus 0.
  std::vector<std::set<Rational>> values(dim);
  for (const auto& prim : m.primitives())
    for (const auto& v : primitive_vertices(prim))
      for (int j = 0; j < dim; ++j) values[j].insert(v[j]);
  for (int j = 0; j < dim; ++j) values[j].insert(Rational(0));
  if (first_seg) {
    // non-axis coordinates are pinned by the common carrier
    for (int j = 0; j < dim; ++j)
      if (j != first_seg->axis) values[j] = {first_seg->rep[j]};
  }
  std::vector<std::vector<Rational>> vals(dim);
  for (int j = 0; j < dim; ++j) vals[j].assign(values[j].begin(), values[j].end());
  std::vector<size_t> idx(dim, 0);
  while (true) {
    std::vector<Rational> c(dim);
    for (int j = 0; j < dim; ++j) c[j] = vals[j][idx[j]];
    Point center(std::move(c));
    bool ok = true;
    for (const auto& t : shapes)
      if (!shape_in_main_cross(t, center)) {
        ok = false;
        break;
      }
    if (ok) return center;
    int j = dim - 1;
    while (j >= 0 && ++idx[j] == vals[j].size()) idx[j--] = 0;
    if (j < 0) break;
  }
  return std::nullopt;
}

}  // namespace

std::optional<Point> main_cross_subset_center(const SetModel& m) {
  std::vector<EffectiveShape> shapes;
  for (const auto& prim : m.primitives()) {
    auto s = effective_shape(prim);
    if (s.kind == EffectiveShape::KHigher) return std::nullopt;
    shapes.push_back(std::move(s));
  }
  return find_main_cross_center(m, shapes);
}

std::optional<Point> is_cross(const SetModel& m) {
  if (!m.eqc().empty()) return std::nullopt;
  return main_cross_subset_center(m);
}

std::optional<CocrossWitness> is_cocross(const SetModel& m) {
  const int dim = m.dim();
  IndexSet frozen = m.eqc();
  if (frozen.count() > dim - 2) return std::nullopt;

  // Convex primitive inside a finite union of hyperplanes lies in one of
  // them: each primitive must have some free coordinate frozen at value v.
  // Option sets are per-primitive {(i, v)}; pick one per primitive with
  // consistent values per coordinate.
  struct Option {
    int coord;
    Rational value;
  };
  std::vector<std::vector<Option>> options;
  for (const auto& prim : m.primitives()) {
    auto consts = primitive_constant_coords(prim);
    std::vector<Option> opts;
    for (int j = 0; j < dim; ++j)
      if (!frozen.contains(j) && consts[j]) opts.push_back({j, *consts[j]});
    if (opts.empty()) return std::nullopt;
    options.push_back(std::move(opts));
  }

  std::map<int, Rational> assignment;
  auto backtrack = [&](auto&& self, size_t k) -> bool {
    if (k == options.size()) return true;
    // already satisfied by the current assignment?
    for (const auto& o : options[k]) {
      auto it = assignment.find(o.coord);
      if (it != assignment.end() && it->second == o.value) return self(self, k + 1);
    }
    for (const auto& o : options[k]) {
      if (assignment.count(o.coord)) continue;  // bound to another value
      assignment.emplace(o.coord, o.value);
      if (self(self, k + 1)) return true;
      assignment.erase(o.coord);
    }
    return false;
  };
  if (!backtrack(backtrack, 0)) return std::nullopt;

  std::vector<Rational> c(dim);
  auto frozen_values = primitive_constant_coords(m.primitives().front());
  for (int j = 0; j < dim; ++j) {
    if (auto it = assignment.find(j); it != assignment.end())
      c[j] = it->second;
    else if (frozen.contains(j) && frozen_values[j])
      c[j] = *frozen_values[j];
    // otherwise any value works for coordinate j; keep 0
  }
  return CocrossWitness{Point(std::move(c)), frozen};
}

Classification classify(const SetModel& m) {
  Classification out;
  out.eqc = m.eqc();
  out.cross_center = is_cross(m);
  out.cocross = is_cocross(m);
  out.main_cross_subset_center = main_cross_subset_center(m);
  out.component_count = static_cast<int>(connected_components(m).size());
  if (out.cocross && m.dim() == 3)
    out.prop1_expected_strictly_l1_convex = out.is_cross() && out.component_count == 1;
  return out;
}

}  // namespace sunlab
