#include "sunlab/sun_checker.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "sunlab/parallel.hpp"
#include "sunlab/primitive_lp.hpp"
#include "sunlab/rng.hpp"

namespace sunlab {

ConeSpec::ConeSpec(Point y_, Point x_) : y(std::move(y_)), x(std::move(x_)) {
  require_same_dim(y, x);
  r = distance(x, y, Norm::Linf);
  if (r.sign() == 0) throw std::invalid_argument("ConeSpec: apex equals query point");
  for (int j = 0; j < x.dim(); ++j)
    if ((x[j] - y[j]).abs() == r) active.add(j);
}

bool cone_contains(const ConeSpec& spec, const Point& z) {
  if (z.dim() != spec.x.dim()) throw std::invalid_argument("dimension mismatch");
  for (int j = 0; j < z.dim(); ++j) {
    if (!spec.active.contains(j)) continue;
    Rational slack = (spec.x[j] - spec.y[j]).sign() > 0 ? z[j] - spec.y[j] : spec.y[j] - z[j];
    if (!(Rational(0) < slack)) return false;
  }
  return true;
}

bool cone_contains_by_definition(const ConeSpec& spec, const Point& z) {
  if (z.dim() != spec.x.dim()) throw std::invalid_argument("dimension mismatch");
  if (z == spec.y) return false;  // degenerate segment stays on the sphere
  auto m = minimize_on_segment(spec.x, spec.y, z, Norm::Linf);
  return m.value < spec.r;
}

ConeClearance check_supporting_cone(const SetModel& m, const ConeSpec& spec) {
  const int dim = m.dim();
  auto actives = spec.active.to_vector(dim);
  for (const auto& prim : m.primitives()) {
    if (const auto* sp = std::get_if<SinglePoint>(&prim)) {
      if (cone_contains(spec, sp->p)) return {false, sp->p};
      continue;
    }
    // maximize s  s.t.  s <= sign(x_j - y_j) (z_j - y_j) for active j, z in P
    const int nv = primitive_var_count(prim);
    const int total = nv + 1;  // slack variable is last, free
    LpProblem lp(total);
    auto e = embed_primitive(lp, prim, 0);
    for (int j : actives) {
      std::vector<Rational> f(dim);
      f[j] = (spec.x[j] - spec.y[j]).sign() > 0 ? Rational(1) : Rational(-1);
      Rational c;
      auto row = expand_functional(e, total, f, c);
      row[nv] -= 1;  // sigma*z_j - s >= sigma*y_j
      Rational rhs = (f[j] * spec.y[j]) - c;
      lp.add_ge(std::move(row), rhs);
    }
    std::vector<Rational> obj(total);
    obj[nv] = -1;  // maximize s
    lp.set_objective(std::move(obj));
    auto sol = lp_solve(lp);
    if (!sol.optimal()) throw std::runtime_error("check_supporting_cone: LP failed");
    if (Rational(0) < -sol.value) {
      Point w = embedded_point(e, sol.x);
      return {false, w};
    }
  }
  return {true, std::nullopt};
}

namespace {

SolarVerdict solar_walk(const SetModel& m, const Point& x, const Point& y,
                        const std::vector<Rational>& schedule) {
  if (schedule.empty()) throw std::invalid_argument("solar check: empty lambda schedule");
  SolarVerdict out;
  for (const Rational& lambda : schedule) {
    Point z = ray_point(y, x, lambda);
    auto pr = project(m, z, Norm::Linf);
    Rational dzy = distance(z, y, Norm::Linf);
    if (pr.rho < dzy) {
      out.solar = false;
      out.lambda = lambda;
      out.z = std::move(z);
      out.rho_at_z = pr.rho;
      out.competing = pr.witnesses.front().minimizer;
      return out;
    }
  }
  out.solar = true;
  out.lambda_max_checked = schedule.back();
  return out;
}

}  // namespace

SolarVerdict is_solar_point(const SetModel& m, const Point& x, const Point& y,
                            const std::vector<Rational>& schedule) {
  m.require_dim(x);
  m.require_dim(y);
  Rational r = distance(x, y, Norm::Linf);
  Rational rho = distance_to_set(m, x, Norm::Linf);
  if (!(r == rho) || rho.sign() == 0)
    throw std::invalid_argument("is_solar_point: y must be a nearest point of an external x");
  return solar_walk(m, x, y, schedule);
}

SunCheck check_sun_at(const SetModel& m, const Point& x, const std::vector<Rational>& schedule) {
  auto pr = project(m, x, Norm::Linf);
  if (pr.rho.sign() == 0) throw std::invalid_argument("check_sun_at: x must be external");
  SunCheck out;
  for (const auto& y : nearest_point_samples(pr)) {
    auto v = is_solar_point(m, x, y, schedule);
    if (v.solar) {
      out.found = true;
      out.witness = y;
      return out;
    }
    out.failures.push_back(std::move(v));
  }
  return out;
}

bool solar_segment_on_sphere(const SetModel& m, const Point& x, const Point& y_hat,
                             const Point& y, const std::vector<Rational>& t_samples) {
  Rational rho = distance_to_set(m, x, Norm::Linf);
  if (!(distance(x, y, Norm::Linf) == rho) || !(distance(x, y_hat, Norm::Linf) == rho))
    throw std::invalid_argument("solar_segment_on_sphere: both points must be nearest to x");
  for (const Rational& t : t_samples) {
    Point p = y + t * (y_hat - y);
    if (!(distance(x, p, Norm::Linf) == rho)) return false;
  }
  return true;
}

std::vector<Point> external_samples(const SetModel& m, const Config& cfg,
                                    const std::vector<Point>& extra) {
  const int dim = m.dim();
  Point lo = Point::zero(dim), hi = Point::zero(dim);
  bool first = true;
  for (const auto& prim : m.primitives()) {
    Point plo = Point::zero(dim), phi = Point::zero(dim);
    primitive_bounds(prim, plo, phi);
    if (first) {
      lo = plo;
      hi = phi;
      first = false;
    } else {
      lo = coordinate_min(lo, plo);
      hi = coordinate_max(hi, phi);
    }
  }

  std::vector<Point> out;
  std::set<Point> seen;
  auto push = [&](const Point& p) {
    if (static_cast<long>(out.size()) >= 4 * cfg.sweep_budget) return;
    if (!seen.insert(p).second) return;
    if (contains(m, p)) return;
    out.push_back(p);
  };

  for (const auto& p : extra) push(p);

  // Normal probes: points offset from a primitive's centroid and vertices
  // along its constant coordinates. A nearest point on a flat piece with a
  // one-coordinate active set is where solar violations of piecewise-linear
  // sets show up, so probe there directly.
  for (const auto& prim : m.primitives()) {
    auto consts = primitive_constant_coords(prim);
    auto verts = primitive_vertices(prim);
    Point centroid = Point::zero(dim);
    for (const auto& v : verts) centroid = centroid + Rational(1, (long)verts.size()) * v;
    std::vector<Point> bases{centroid};
    if (std::holds_alternative<Segment>(prim))
      for (const auto& v : verts) bases.push_back(midpoint(centroid, v));
    Rational diam;
    for (const auto& v : verts) diam = max(diam, distance(centroid, v, Norm::Linf));
    std::vector<Rational> offsets{Rational(1), Rational(1, 2), Rational(1, 4), Rational(1, 8)};
    if (diam.sign() > 0) {
      offsets.push_back(diam * Rational(1, 2));
      offsets.push_back(diam * Rational(1, 4));
    }
    for (int j = 0; j < dim; ++j) {
      if (!consts[j]) continue;
      for (const auto& base : bases) {
        for (const Rational& off : offsets) {
          Point q = base;
          q[j] += off;
          push(q);
          q[j] -= Rational(2) * off;
          push(q);
        }
      }
    }
  }

  // Characteristic lattice: coordinates drawn from structural values of the
  // set (constants and vertex coordinates) and their unit offsets. Violating
  // configurations of piecewise-linear sets live on these alignments.
  std::vector<std::vector<Rational>> vals(dim);
  for (int j = 0; j < dim; ++j) {
    std::set<Rational> vj;
    for (const auto& prim : m.primitives()) {
      auto consts = primitive_constant_coords(prim);
      if (consts[j]) {
        vj.insert(*consts[j]);
        vj.insert(*consts[j] + Rational(1));
        vj.insert(*consts[j] - Rational(1));
      }
    }
    vj.insert(midpoint(lo, hi)[j]);
    vj.insert(hi[j] + Rational(1));
    vals[j].assign(vj.begin(), vj.end());
    if (vals[j].size() > 6) {
      // keep the six values nearest the structure's center
      Rational center = midpoint(lo, hi)[j];
      std::stable_sort(vals[j].begin(), vals[j].end(), [&](const Rational& a, const Rational& b) {
        return (a - center).abs() < (b - center).abs();
      });
      vals[j].resize(6);
      std::sort(vals[j].begin(), vals[j].end());
    }
  }
  std::vector<size_t> idx(dim, 0);
  while (true) {
    std::vector<Rational> c(dim);
    for (int j = 0; j < dim; ++j) c[j] = vals[j][idx[j]];
    push(Point(std::move(c)));
    int j = dim - 1;
    while (j >= 0 && ++idx[j] == vals[j].size()) idx[j--] = 0;
    if (j < 0) break;
  }

  // Shell of the bounding box inflated by 1: corners and face centers.
  Point slo = lo, shi = hi;
  for (int j = 0; j < dim; ++j) {
    slo[j] -= 1;
    shi[j] += 1;
  }
  for (const auto& corner : primitive_vertices(AxisBox{slo, shi})) push(corner);
  for (int j = 0; j < dim; ++j) {
    Point c = midpoint(slo, shi);
    c[j] = slo[j];
    push(c);
    c[j] = shi[j];
    push(c);
  }

  // Seeded random fill.
  Rng rng(cfg.seed ^ 0x5eedULL);
  long want = cfg.sweep_budget;
  for (long k = 0; k < 8 * want && static_cast<long>(out.size()) < want; ++k) {
    std::vector<Rational> c(dim);
    for (int j = 0; j < dim; ++j) c[j] = rng.between(slo[j], shi[j], 4);
    push(Point(std::move(c)));
  }
  return out;
}

SweepResult sun_sweep(const SetModel& m, const Config& cfg,
                      const std::vector<Point>& extra_candidates) {
  SweepResult out;
  auto xs = external_samples(m, cfg, extra_candidates);

  struct Slot {
    bool used = false;
    SolarCheckRecord rec;
    long cone_exceptions = 0;
    std::optional<SweepResult::SegmentCase> segment;
  };
  std::vector<Slot> slots(xs.size());

  // Checks at distinct sample points are independent; results land in
  // indexed slots so the report is identical for any job count.
  parallel_for(xs.size(), cfg.jobs, [&](size_t i) {
    const Point& x = xs[i];
    auto pr = project(m, x, Norm::Linf);
    if (pr.rho.sign() == 0) return;  // boundary-safe: membership filtered already
    Slot& slot = slots[i];
    slot.used = true;
    SolarCheckRecord& rec = slot.rec;
    rec.x = x;
    rec.rho = pr.rho;
    rec.strict_ok = true;
    Point solar_witness = x;  // placeholder until found
    std::vector<Point> nearest = nearest_point_samples(pr);
    for (const auto& y : nearest) {
      SolarCheckRecord::PerWitness pw;
      pw.y = y;
      pw.verdict = solar_walk(m, x, y, cfg.lambda_schedule);  // y at distance rho by construction
      ConeSpec spec(y, x);
      auto cone = check_supporting_cone(m, spec);
      pw.cone_holds = cone.holds;
      pw.cone_witness = cone.witness;
      if (pw.cone_holds && !pw.verdict.solar) ++slot.cone_exceptions;
      if (pw.verdict.solar && !rec.sun_ok) {
        rec.sun_ok = true;
        solar_witness = y;
      }
      if (!pw.verdict.solar) rec.strict_ok = false;
      rec.checks.push_back(std::move(pw));
    }
    // Solar + second nearest point: the connecting segment must stay on the
    // sphere around x.
    if (rec.sun_ok) {
      for (const auto& y : nearest) {
        if (y == solar_witness) continue;
        slot.segment = SweepResult::SegmentCase{x, solar_witness, y,
                                                solar_segment_on_sphere(m, x, solar_witness, y)};
        break;  // one case per x keeps the sweep lean
      }
    }
  });

  for (auto& slot : slots) {
    if (!slot.used) continue;
    out.cone_holds_but_not_solar += slot.cone_exceptions;
    if (slot.segment) out.sphere_segments.push_back(std::move(*slot.segment));
    out.records.push_back(std::move(slot.rec));
  }
  return out;
}

Verdict SweepResult::sun_verdict() const {
  Verdict v;
  v.kind = VerdictKind::SampledPass;
  v.pairs_checked = static_cast<long>(records.size());
  for (const auto& rec : records) {
    if (rec.sun_ok) continue;
    v.kind = VerdictKind::Refuted;
    v.detail = "no nearest-point sample is solar at this x";
    v.points.emplace_back("x", rec.x);
    v.scalars.emplace_back("rho", rec.rho);
    if (!rec.checks.empty() && !rec.checks.front().verdict.solar) {
      const auto& bad = rec.checks.front().verdict;
      v.points.emplace_back("y", rec.checks.front().y);
      v.points.emplace_back("z", bad.z);
      v.points.emplace_back("competing", bad.competing);
      v.scalars.emplace_back("lambda", bad.lambda);
      v.scalars.emplace_back("rho_at_z", bad.rho_at_z);
    }
    return v;
  }
  return v;
}

Verdict SweepResult::strict_sun_verdict() const {
  Verdict v;
  v.kind = VerdictKind::SampledPass;
  v.pairs_checked = static_cast<long>(records.size());
  for (const auto& rec : records) {
    if (rec.strict_ok) continue;
    for (const auto& pw : rec.checks) {
      if (pw.verdict.solar) continue;
      v.kind = VerdictKind::Refuted;
      v.detail = "nearest point fails the ray property";
      v.points.emplace_back("x", rec.x);
      v.points.emplace_back("y", pw.y);
      v.points.emplace_back("z", pw.verdict.z);
      v.points.emplace_back("competing", pw.verdict.competing);
      v.scalars.emplace_back("lambda", pw.verdict.lambda);
      v.scalars.emplace_back("rho", rec.rho);
      v.scalars.emplace_back("rho_at_z", pw.verdict.rho_at_z);
      return v;
    }
  }
  return v;
}

Verdict check_strict_sun(const SetModel& m, const Config& cfg) {
  return sun_sweep(m, cfg).strict_sun_verdict();
}

}  // namespace sunlab
