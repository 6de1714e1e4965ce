#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "sunlab/rng.hpp"
#include "sunlab/set_model.hpp"
#include "test_util.hpp"

using namespace sunlab;
using namespace sunlab::testing;

namespace {

SetModel random_scene(Rng& rng, int dim) {
  std::vector<Primitive> prims;
  int n = 1 + static_cast<int>(rng.below(3));
  for (int i = 0; i < n; ++i) {
    switch (rng.below(3)) {
      case 0: {
        std::vector<Rational> c(dim);
        for (int j = 0; j < dim; ++j) c[j] = rng.between(Rational(-2), Rational(2), 3);
        prims.push_back(SinglePoint{Point(std::move(c))});
        break;
      }
      case 1: {
        std::vector<Rational> a(dim), b(dim);
        for (int j = 0; j < dim; ++j) {
          a[j] = rng.between(Rational(-2), Rational(2), 3);
          b[j] = rng.between(Rational(-2), Rational(2), 3);
        }
        Point pa{std::move(a)}, pb{std::move(b)};
        if (pa == pb) pb[0] += Rational(1, 2);
        prims.push_back(Segment{pa, pb});
        break;
      }
      default: {
        std::vector<Rational> lo(dim), hi(dim);
        for (int j = 0; j < dim; ++j) {
          lo[j] = rng.between(Rational(-2), Rational(0), 3);
          hi[j] = lo[j] + rng.between(Rational(1, 4), Rational(3, 2), 3);
        }
        prims.push_back(AxisBox{Point(std::move(lo)), Point(std::move(hi))});
        break;
      }
    }
  }
  return SetModel(dim, "random", std::move(prims));
}

}  // namespace

TEST_CASE("membership basics") {
  SetModel box = unit_box3();
  CHECK(contains(box, ptr({"1/2", "1/2", "1/2"})));
  CHECK(contains(box, pt({0, 0, 0})));
  CHECK_FALSE(contains(box, pt({2, 0, 0})));

  SetModel cross = main_cross3();
  CHECK_FALSE(contains(cross, pt({1, 1, 0})));
  CHECK(contains(cross, pt({1, 0, 0})));

  SetModel seg(3, "seg", {Segment{pt({0, 0, 0}), pt({1, 1, 1})}});
  CHECK(contains(seg, ptr({"1/3", "1/3", "1/3"})));
  CHECK_FALSE(contains(seg, ptr({"1/3", "1/3", "1/2"})));

  CHECK_THROWS_AS(contains(box, pt({0, 0})), std::invalid_argument);
}

TEST_CASE("polytope membership through exact feasibility") {
  SetModel tri(3, "tri", {Polytope{{pt({0, 0, 0}), pt({1, 0, 0}), pt({0, 1, 0})}}});
  CHECK(contains(tri, ptr({"1/4", "1/4", "0"})));
  CHECK(contains(tri, ptr({"1/2", "1/2", "0"})));  // edge
  CHECK_FALSE(contains(tri, ptr({"3/4", "3/4", "0"})));
  CHECK_FALSE(contains(tri, ptr({"1/4", "1/4", "1/8"})));
}

TEST_CASE("segment cover: convex, union, and gap cases") {
  SetModel box = unit_box3();
  CHECK(segment_inside(box, pt({0, 0, 0}), pt({1, 1, 1})));

  SetModel cross = main_cross3();
  CHECK_FALSE(segment_inside(cross, pt({1, 0, 0}), pt({0, 1, 0})));

  SetModel two(3, "two-boxes",
               {AxisBox{pt({0, 0, 0}), pt({1, 1, 1})},
                AxisBox{pt({1, 0, 0}), pt({2, 1, 1})}});
  Point a = ptr({"1/2", "1/2", "1/2"});
  Point b = ptr({"3/2", "1/2", "1/2"});
  CHECK(segment_inside(two, a, b));
  CHECK(oracles::segment_cover_grid(two, a, b, 64));

  // gap between abutting-at-a-corner boxes is not covered
  SetModel corner(3, "corner",
                  {AxisBox{pt({0, 0, 0}), pt({1, 1, 1})},
                   AxisBox{pt({2, 0, 0}), pt({3, 1, 1})}});
  CHECK_FALSE(segment_inside(corner, a, ptr({"5/2", "1/2", "1/2"})));
}

TEST_CASE("segment cover implies membership of sampled points") {
  Rng rng(23);
  for (int it = 0; it < 60; ++it) {
    SetModel m = random_scene(rng, 3);
    auto pts = sample_points(m, {12, rng.next()});
    for (size_t i = 0; i + 1 < pts.size(); i += 2) {
      const Point& a = pts[i];
      const Point& b = pts[i + 1];
      if (!segment_inside(m, a, b)) continue;
      CHECK(contains(m, midpoint(a, b)));
      for (int k = 1; k <= 10; ++k)
        CHECK(contains(m, a + Rational(k, 11) * (b - a)));
    }
  }
}

TEST_CASE("connected components") {
  CHECK(connected_components(main_cross3()).size() == 1);

  SetModel two(3, "two-boxes", {AxisBox{pt({0, 0, 0}), pt({1, 1, 1})},
                                AxisBox{pt({2, 2, 2}), pt({3, 3, 3})}});
  CHECK(connected_components(two).size() == 2);

  // cross with one arm pushed off the center: 2 components
  SetModel detached(3, "detached",
                    {Segment{pt({1, 0, 0}), pt({2, 0, 0})},
                     Segment{pt({0, -3, 0}), pt({0, 3, 0})},
                     Segment{pt({0, 0, -3}), pt({0, 0, 3})}});
  CHECK(connected_components(detached).size() == 2);
}

TEST_CASE("intersection points certify component edges") {
  SetModel cross = main_cross3();
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      auto w = intersection_point(cross, i, j);
      REQUIRE(w);
      CHECK(*w == pt({0, 0, 0}));
      CHECK(primitive_contains(cross.primitives()[i], *w));
      CHECK(primitive_contains(cross.primitives()[j], *w));
    }
  SetModel apart(3, "apart",
                 {AxisBox{pt({0, 0, 0}), pt({1, 1, 1})}, SinglePoint{pt({3, 3, 3})}});
  CHECK_FALSE(intersection_point(apart, 0, 1));
}

TEST_CASE("parameter intervals of a segment against each primitive kind") {
  Point a = pt({-1, 0, 0}), b = pt({3, 0, 0});
  // box clip
  auto box = primitive_param_interval(AxisBox{pt({0, -1, -1}), pt({1, 1, 1})}, a, b);
  REQUIRE(box);
  CHECK(box->first == Rational(1, 4));
  CHECK(box->second == Rational(1, 2));
  // point on the line
  auto hit = primitive_param_interval(SinglePoint{pt({2, 0, 0})}, a, b);
  REQUIRE(hit);
  CHECK(hit->first == Rational(3, 4));
  CHECK(hit->first == hit->second);
  CHECK_FALSE(primitive_param_interval(SinglePoint{pt({2, 1, 0})}, a, b));
  // crossing segment meets in one parameter
  auto seg = primitive_param_interval(Segment{pt({1, -1, 0}), pt({1, 1, 0})}, a, b);
  REQUIRE(seg);
  CHECK(seg->first == Rational(1, 2));
  CHECK(seg->first == seg->second);
  // collinear overlapping segment yields the overlap interval
  auto overlap = primitive_param_interval(Segment{pt({1, 0, 0}), pt({5, 0, 0})}, a, b);
  REQUIRE(overlap);
  CHECK(overlap->first == Rational(1, 2));
  CHECK(overlap->second == Rational(1));
  // polytope through the LP route
  auto tri = primitive_param_interval(
      Polytope{{pt({0, -1, 0}), pt({0, 1, 0}), pt({2, 0, 0})}}, a, b);
  REQUIRE(tri);
  CHECK(tri->first == Rational(1, 4));
  CHECK(tri->second == Rational(3, 4));
}

TEST_CASE("components are invariant under primitive reordering") {
  std::vector<Primitive> prims{Segment{pt({1, 0, 0}), pt({2, 0, 0})},
                               Segment{pt({0, -3, 0}), pt({0, 3, 0})},
                               Segment{pt({0, 0, -3}), pt({0, 0, 3})},
                               SinglePoint{pt({2, 0, 0})}};
  SetModel a(3, "a", prims);
  std::reverse(prims.begin(), prims.end());
  SetModel b(3, "b", prims);
  CHECK(connected_components(a).size() == connected_components(b).size());
}

TEST_CASE("constant coordinates of a set") {
  SetModel single(3, "pt", {SinglePoint{pt({1, 2, 3})}});
  CHECK(constant_coords(single) == IndexSet::all(3));

  CHECK(constant_coords(main_cross3()).empty());

  SetModel planar(3, "planar", {AxisBox{pt({0, 0, 0}), pt({1, 1, 0})}});
  auto eqc = constant_coords(planar);
  CHECK(eqc.to_vector(3) == std::vector<int>{2});
}

TEST_CASE("eqc of the set refines every sampled pair's equal coordinates") {
  Rng rng(31);
  for (int it = 0; it < 40; ++it) {
    SetModel m = random_scene(rng, 3);
    auto pts = sample_points(m, {16, rng.next()});
    for (size_t i = 0; i < pts.size(); ++i)
      for (size_t j = i + 1; j < pts.size(); ++j)
        CHECK(m.eqc().subset_of(equal_coords(pts[i], pts[j])));
  }
}

TEST_CASE("sampling: vertices always included, deterministic, in-set") {
  SetModel single(3, "pt", {SinglePoint{pt({1, 2, 3})}});
  auto only = sample_points(single, {5, 42});
  REQUIRE(only.size() == 1);
  CHECK(only[0] == pt({1, 2, 3}));

  SetModel seg(3, "seg", {Segment{pt({0, 0, 0}), pt({1, 1, 1})}});
  auto s = sample_points(seg, {3, 7});
  CHECK(std::find(s.begin(), s.end(), pt({0, 0, 0})) != s.end());
  CHECK(std::find(s.begin(), s.end(), pt({1, 1, 1})) != s.end());

  SetModel box = unit_box3();
  auto a = sample_points(box, {100, 7});
  auto b = sample_points(box, {100, 7});
  CHECK(a == b);
  for (const auto& p : a) CHECK(contains(box, p));
  CHECK(a.size() >= 100);

  CHECK_THROWS_AS(sample_points(box, {0, 7}), std::invalid_argument);
}

TEST_CASE("membership agrees with float rasterization away from boundaries") {
  Rng rng(37);
  long tested = 0;
  for (int it = 0; it < 25; ++it) {
    SetModel m = random_scene(rng, 3);
    for (long gx = -4; gx <= 4; ++gx)
      for (long gy = -4; gy <= 4; ++gy)
        for (long gz = -4; gz <= 4; ++gz) {
          Point c = ptr({"1/32", "1/32", "1/32"});
          Point p = pt({0, 0, 0});
          p[0] = Rational(gx, 2) + c[0];
          p[1] = Rational(gy, 2) + c[1];
          p[2] = Rational(gz, 2) + c[2];
          auto verdict = oracles::float_membership(m, p, 1.0 / 16.0);
          if (!verdict) continue;  // too close to a boundary
          CHECK(contains(m, p) == *verdict);
          ++tested;
        }
  }
  CHECK(tested > 2000);
}

TEST_CASE("model validation and normalization") {
  CHECK_THROWS_AS(SetModel(3, "bad", {}), std::invalid_argument);
  CHECK_THROWS_AS(SetModel(3, "bad", {AxisBox{pt({1, 0, 0}), pt({0, 1, 1})}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(SetModel(3, "bad", {SinglePoint{pt({0, 0})}}), std::invalid_argument);

  // degenerate segment -> point; degenerate box -> segment; 2x degenerate -> point
  SetModel m(3, "norm",
             {Segment{pt({1, 1, 1}), pt({1, 1, 1})},
              AxisBox{pt({0, 0, 0}), pt({0, 2, 0})},
              AxisBox{pt({5, 5, 5}), pt({5, 5, 5})}});
  CHECK(std::holds_alternative<SinglePoint>(m.primitives()[0]));
  CHECK(std::holds_alternative<Segment>(m.primitives()[1]));
  CHECK(std::holds_alternative<SinglePoint>(m.primitives()[2]));
}

TEST_CASE("closest pair straddles the gap between disjoint primitives") {
  SetModel detached(3, "detached",
                    {Segment{pt({1, 0, 0}), pt({2, 0, 0})},
                     Segment{pt({0, -3, 0}), pt({0, 3, 0})}});
  auto [u, v] = closest_pair(detached, 0, 1, Norm::L1);
  CHECK(u == pt({1, 0, 0}));
  CHECK(v == pt({0, 0, 0}));
  CHECK(distance(u, v, Norm::L1) == Rational(1));
}
