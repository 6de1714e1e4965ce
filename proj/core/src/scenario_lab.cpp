#include "sunlab/scenario_lab.hpp"

#include <chrono>
#include <stdexcept>

#include "sunlab/parallel.hpp"
#include "sunlab/rng.hpp"

namespace sunlab {

const char* family_name(Family f) {
  switch (f) {
    case Family::MainCross: return "main-cross";
    case Family::CrossSubset: return "cross-subset";
    case Family::MainCocross: return "main-cocross";
    case Family::CocrossCJ: return "cocross-cj";
    case Family::Box: return "box";
    case Family::MonotoneTube: return "monotone-tube";
    case Family::CocrossLine4: return "cocross-line4";
    case Family::TwoPoints: return "two-points";
    case Family::RandomL1Convex: return "random-l1-convex";
  }
  return "?";
}

std::optional<Family> family_from_name(const std::string& name) {
  for (Family f : {Family::MainCross, Family::CrossSubset, Family::MainCocross, Family::CocrossCJ,
                   Family::Box, Family::MonotoneTube, Family::CocrossLine4, Family::TwoPoints,
                   Family::RandomL1Convex})
    if (name == family_name(f)) return f;
  return std::nullopt;
}

namespace {

Point center_of(const FamilySpec& spec) {
  if (spec.center) {
    if (spec.center->dim() != spec.dim)
      throw std::invalid_argument("generate: center dimension mismatch");
    return *spec.center;
  }
  return Point::zero(spec.dim);
}

Point axis_step(int dim, int axis, const Rational& value) {
  Point p = Point::zero(dim);
  p[axis] = value;
  return p;
}

SetModel make_main_cross(const FamilySpec& spec) {
  Point c = center_of(spec);
  std::vector<Primitive> prims;
  for (int j = 0; j < spec.dim; ++j)
    prims.push_back(Segment{c - axis_step(spec.dim, j, spec.extent),
                            c + axis_step(spec.dim, j, spec.extent)});
  return SetModel(spec.dim, std::string("main-cross") + std::to_string(spec.dim), std::move(prims));
}

SetModel make_cross_subset(const FamilySpec& spec, std::uint64_t seed) {
  Point c = center_of(spec);
  Rng rng(seed);
  std::vector<Primitive> prims;
  int detached_axis = spec.connected ? -1 : static_cast<int>(rng.below(spec.dim));
  for (int j = 0; j < spec.dim; ++j) {
    Rational lo, hi;
    if (j == detached_axis) {
      // arm pushed off the center: [e/4 + r, e/2 + r'] on the positive side
      lo = spec.extent * Rational(1, 4) + rng.between(Rational(0), spec.extent * Rational(1, 8));
      hi = lo + spec.extent * Rational(1, 4) + rng.between(Rational(0), spec.extent * Rational(1, 8));
    } else {
      // arm through the center, asymmetric lengths
      lo = -(spec.extent * Rational(1, 4) + rng.between(Rational(0), spec.extent * Rational(3, 4)));
      hi = spec.extent * Rational(1, 4) + rng.between(Rational(0), spec.extent * Rational(3, 4));
    }
    prims.push_back(
        Segment{c + axis_step(spec.dim, j, lo), c + axis_step(spec.dim, j, hi)});
  }
  return SetModel(spec.dim, spec.connected ? "cross-subset" : "cross-subset-detached",
                  std::move(prims));
}

SetModel make_main_cocross(const FamilySpec& spec) {
  Point c = center_of(spec);
  std::vector<Primitive> prims;
  for (int j = 0; j < spec.dim; ++j) {
    Point lo = c, hi = c;
    for (int k = 0; k < spec.dim; ++k) {
      if (k == j) continue;
      lo[k] -= spec.extent;
      hi[k] += spec.extent;
    }
    prims.push_back(AxisBox{lo, hi});  // slab: coordinate j pinned at c_j
  }
  return SetModel(spec.dim, std::string("main-cocross") + std::to_string(spec.dim),
                  std::move(prims));
}

SetModel make_cocross_cj(const FamilySpec& spec) {
  Point c = center_of(spec);
  if (spec.frozen.count() > spec.dim - 2)
    throw std::invalid_argument("generate: frozen assembly too large (card J <= dim-2)");
  auto frozen_list = spec.frozen.to_vector(spec.dim);
  if (spec.frozen_values.size() != frozen_list.size())
    throw std::invalid_argument("generate: frozen values must align with the assembly");
  std::vector<Primitive> prims;
  for (int i = 0; i < spec.dim; ++i) {
    if (spec.frozen.contains(i)) continue;
    Point lo = c, hi = c;
    for (int k = 0; k < spec.dim; ++k) {
      if (k == i) continue;  // free coordinate i pinned at c_i
      if (spec.frozen.contains(k)) {
        size_t at = 0;
        while (frozen_list[at] != k) ++at;
        lo[k] = hi[k] = spec.frozen_values[at];
      } else {
        lo[k] = c[k] - spec.extent;
        hi[k] = c[k] + spec.extent;
      }
    }
    prims.push_back(AxisBox{lo, hi});
  }
  return SetModel(spec.dim, "cocross-cj", std::move(prims));
}

SetModel make_box(const FamilySpec& spec, std::uint64_t seed) {
  if (spec.box_lo || spec.box_hi) {
    if (!spec.box_lo || !spec.box_hi || spec.box_lo->dim() != spec.dim ||
        spec.box_hi->dim() != spec.dim)
      throw std::invalid_argument("generate: box corners must both be given, matching dim");
    return SetModel(spec.dim, "box", {AxisBox{*spec.box_lo, *spec.box_hi}});
  }
  Point c = center_of(spec);
  Rng rng(seed);
  Point lo = c, hi = c;
  for (int j = 0; j < spec.dim; ++j) {
    Rational a = rng.between(Rational(0), spec.extent * Rational(1, 2));
    Rational b = rng.between(a + spec.extent * Rational(1, 8), spec.extent);
    lo[j] = c[j] - a;
    hi[j] = c[j] + b;
  }
  return SetModel(spec.dim, "box", {AxisBox{lo, hi}});
}

SetModel make_monotone_tube(const FamilySpec& spec, std::uint64_t seed) {
  Point c = center_of(spec);
  Rng rng(seed);
  const int pieces = std::max(2, spec.pieces);
  Rational side = spec.extent * Rational(1, pieces);
  Point lo = c, hi = c;
  for (int j = 0; j < spec.dim; ++j) {
    lo[j] = c[j] - spec.extent * Rational(1, 2);
    hi[j] = lo[j] + side;
  }
  std::vector<Primitive> prims;
  prims.push_back(AxisBox{lo, hi});
  for (int k = 1; k < pieces; ++k) {
    for (int j = 0; j < spec.dim; ++j) {
      // step strictly forward but keep a solid overlap with the last box
      Rational step = side * Rational(1, 4) + rng.between(Rational(0), side * Rational(1, 4));
      lo[j] += step;
      hi[j] += step;
    }
    prims.push_back(AxisBox{lo, hi});
  }
  return SetModel(spec.dim, "monotone-tube", std::move(prims));
}

SetModel make_cocross_line4(const FamilySpec& spec) {
  const int dim = 4;
  Point c = spec.center ? *spec.center : Point::zero(dim);
  std::vector<Primitive> prims;
  for (int j = 0; j < 3; ++j) {
    Point lo = c, hi = c;
    for (int k = 0; k < 3; ++k) {
      if (k == j) continue;
      lo[k] -= spec.extent;
      hi[k] += spec.extent;
    }
    prims.push_back(AxisBox{lo, hi});  // slab {x_j = c_j, x_4 = c_4}
  }
  prims.push_back(Segment{c - axis_step(dim, 3, spec.extent), c + axis_step(dim, 3, spec.extent)});
  return SetModel(dim, "cocross-line4", std::move(prims));
}

SetModel make_two_points(const FamilySpec& spec, std::uint64_t seed) {
  Point c = center_of(spec);
  Rng rng(seed);
  Point p = c, q = c;
  for (int j = 0; j < spec.dim; ++j) {
    p[j] = c[j] - rng.between(spec.extent * Rational(1, 4), spec.extent);
    q[j] = c[j] + rng.between(spec.extent * Rational(1, 4), spec.extent);
  }
  return SetModel(spec.dim, "two-points", {SinglePoint{p}, SinglePoint{q}});
}

SetModel make_random_l1_convex(const FamilySpec& spec, std::uint64_t seed) {
  Point c = center_of(spec);
  Rng rng(seed);
  const int pieces = std::max(1, spec.pieces);
  Point cur = c;
  for (int j = 0; j < spec.dim; ++j) cur[j] -= spec.extent * Rational(1, 2);
  std::vector<Primitive> prims;
  Rational reach = spec.extent * Rational(1, pieces);
  for (int k = 0; k < pieces; ++k) {
    Point next = cur;
    bool moved = false;
    for (int j = 0; j < spec.dim; ++j) {
      Rational d;
      if (spec.strict_steps) {
        d = reach * Rational(1, 8) + rng.between(Rational(0), reach * Rational(7, 8));
      } else {
        d = rng.between(Rational(0), reach);
        if (rng.below(4) == 0) d = Rational(0);  // allow flat coordinates
      }
      if (d.sign() != 0) moved = true;
      next[j] = cur[j] + d;
    }
    if (!moved) next[0] = cur[0] + reach * Rational(1, 2);
    prims.push_back(Segment{cur, next});
    cur = next;
  }
  return SetModel(spec.dim, spec.strict_steps ? "strict-chain" : "random-l1-convex",
                  std::move(prims));
}

}  // namespace

SetModel generate(const FamilySpec& spec, std::uint64_t seed) {
  if (!(Rational(0) < spec.extent)) throw std::invalid_argument("generate: extent must be positive");
  if (spec.dim < kMinDim || spec.dim > kMaxDim)
    throw std::invalid_argument("generate: dim must be in {2,3,4}");
  switch (spec.family) {
    case Family::MainCross: return make_main_cross(spec);
    case Family::CrossSubset: return make_cross_subset(spec, seed);
    case Family::MainCocross: return make_main_cocross(spec);
    case Family::CocrossCJ: return make_cocross_cj(spec);
    case Family::Box: return make_box(spec, seed);
    case Family::MonotoneTube: return make_monotone_tube(spec, seed);
    case Family::CocrossLine4: return make_cocross_line4(spec);
    case Family::TwoPoints: return make_two_points(spec, seed);
    case Family::RandomL1Convex: return make_random_l1_convex(spec, seed);
  }
  throw std::invalid_argument("generate: unknown family");
}

namespace {

bool passes(const Verdict& v) { return v.kind != VerdictKind::Refuted; }

}  // namespace

bool ScenarioReport::agree_theorem1() const {
  bool lhs = passes(strict_sun_verdict);
  bool rhs = passes(strictly_l1_convex) && !classification.is_cross();
  return lhs == rhs;
}

bool ScenarioReport::agree_theoremA() const {
  bool lhs = passes(strict_sun_verdict);
  bool rhs = passes(strictly_l1_convex) && !classification.is_cocross();
  return lhs == rhs;
}

bool ScenarioReport::agree_berens_hetzelt() const {
  return passes(sun_verdict) == passes(l1_convex);
}

std::optional<bool> ScenarioReport::agree_prop1() const {
  if (!classification.prop1_expected_strictly_l1_convex) return std::nullopt;
  return passes(strictly_l1_convex) == *classification.prop1_expected_strictly_l1_convex;
}

bool ScenarioReport::all_agree() const {
  if (!agree_theoremA() || !agree_berens_hetzelt()) return false;
  if (dim == 3 && !agree_theorem1()) return false;  // theorem1 is dim-3 only
  auto p1 = agree_prop1();
  return !p1 || *p1;
}

ScenarioReport validate_scene(const SetModel& m, const Config& cfg) {
  auto t0 = std::chrono::steady_clock::now();
  ScenarioReport rep;
  rep.scene = m.name();
  rep.dim = m.dim();
  rep.seed = cfg.seed;
  rep.config = cfg;
  rep.classification = classify(m);
  SearchBudget budget = cfg.search_budget();
  rep.l1_convex = is_l1_convex(m, budget);
  rep.strictly_l1_convex = is_strictly_l1_convex(m, budget);
  rep.distinct_pair = find_coordwise_distinct_pair(m, budget);

  // Points straddling a Menger refutation make non-sun configurations easy
  // to hit in the sweep.
  std::vector<Point> extra;
  if (!rep.l1_convex.passed() && rep.l1_convex.points.size() >= 2) {
    const Point& u = rep.l1_convex.points[0].second;
    const Point& v = rep.l1_convex.points[1].second;
    for (const Rational& t : {Rational(1, 4), Rational(1, 2), Rational(3, 4)})
      extra.push_back(u + t * (v - u));
  }
  auto sweep = sun_sweep(m, cfg, extra);
  rep.sun_verdict = sweep.sun_verdict();
  rep.strict_sun_verdict = sweep.strict_sun_verdict();
  rep.cone_holds_but_not_solar = sweep.cone_holds_but_not_solar;
  rep.sphere_segment_cases = static_cast<long>(sweep.sphere_segments.size());
  for (const auto& sc : sweep.sphere_segments)
    if (!sc.ok) rep.sphere_segments_ok = false;
  rep.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

ScenarioReport validate_theorem1(const SetModel& m, const Config& cfg) {
  if (m.dim() != 3) throw std::invalid_argument("validate_theorem1: dim must be 3");
  return validate_scene(m, cfg);
}

ScenarioReport validate_theoremA(const SetModel& m, const Config& cfg) {
  return validate_scene(m, cfg);
}

ScenarioReport validate_bh(const SetModel& m, const Config& cfg) {
  return validate_scene(m, cfg);
}

ScenarioReport validate_prop1(const SetModel& m, const Config& cfg) {
  if (m.dim() != 3) throw std::invalid_argument("validate_prop1: dim must be 3");
  auto rep = validate_scene(m, cfg);
  if (!rep.classification.is_cocross())
    throw std::invalid_argument("validate_prop1: scene must classify as a cocross");
  return rep;
}

std::vector<SuiteEntry> suite_roster(std::uint64_t base_seed) {
  std::vector<SuiteEntry> out;
  auto add = [&](FamilySpec spec, std::uint64_t salt) {
    out.push_back({std::move(spec), base_seed * 1315423911ULL + salt});
  };
  // canonical scenes
  {
    FamilySpec s;
    s.family = Family::MainCross;
    s.extent = Rational(4);
    add(s, 1);
  }
  {
    FamilySpec s;
    s.family = Family::MainCocross;
    s.extent = Rational(2);
    add(s, 2);
  }
  {
    FamilySpec s;
    s.family = Family::CocrossLine4;
    s.dim = 4;
    s.extent = Rational(2);
    add(s, 3);
  }
  {
    FamilySpec s;
    s.family = Family::Box;
    s.extent = Rational(2);
    add(s, 4);
  }
  // seeded families, dim 3
  for (std::uint64_t k = 0; k < 8; ++k) {
    FamilySpec cross;
    cross.family = Family::CrossSubset;
    cross.extent = Rational(3);
    cross.connected = true;
    add(cross, 100 + k);
    cross.connected = false;
    add(cross, 200 + k);
    FamilySpec box;
    box.family = Family::Box;
    box.extent = Rational(2);
    add(box, 300 + k);
    FamilySpec tube;
    tube.family = Family::MonotoneTube;
    tube.extent = Rational(3);
    tube.pieces = 3;
    add(tube, 400 + k);
    FamilySpec two;
    two.family = Family::TwoPoints;
    two.extent = Rational(2);
    add(two, 500 + k);
    FamilySpec chain;
    chain.family = Family::RandomL1Convex;
    chain.extent = Rational(3);
    chain.pieces = 4;
    add(chain, 600 + k);
    FamilySpec strict_chain = chain;
    strict_chain.strict_steps = true;
    add(strict_chain, 800 + k);
  }
  // proper cocrosses with one frozen coordinate
  for (std::uint64_t k = 0; k < 4; ++k) {
    FamilySpec cj;
    cj.family = Family::CocrossCJ;
    cj.extent = Rational(2);
    cj.frozen.add(static_cast<int>(k % 3));
    cj.frozen_values = {Rational(static_cast<long>(k), 2)};
    add(cj, 700 + k);
  }
  return out;
}

SuiteReport run_suite(const Config& cfg) {
  SuiteReport out;
  out.config = cfg;
  auto roster = suite_roster(cfg.seed);
  out.scenes.resize(roster.size());
  parallel_for(roster.size(), cfg.jobs, [&](size_t i) {
    SetModel m = generate(roster[i].spec, roster[i].seed);
    Config scene_cfg = cfg;
    scene_cfg.seed = roster[i].seed;
    scene_cfg.jobs = 1;  // scenes are the parallel grain here
    out.scenes[i] = validate_scene(m, scene_cfg);
  });
  return out;
}

bool SuiteReport::all_agree() const {
  for (const auto& rep : scenes)
    if (!rep.all_agree()) return false;
  return true;
}

}  // namespace sunlab
