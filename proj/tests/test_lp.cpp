#include <doctest.h>

#include "oracles.hpp"
#include "sunlab/lp.hpp"
#include "sunlab/rng.hpp"
#include "test_util.hpp"

using namespace sunlab;
using namespace sunlab::testing;

TEST_CASE("minimize t subject to t >= 1") {
  LpProblem lp(1);
  lp.set_objective({Rational(1)});
  lp.add_ge({Rational(1)}, Rational(1));
  auto sol = lp_solve(lp);
  REQUIRE(sol.status == LpStatus::Optimal);
  CHECK(sol.value == Rational(1));
  CHECK(sol.x[0] == Rational(1));
}

TEST_CASE("infeasible: x >= 0 and x <= -1") {
  LpProblem lp(1);
  lp.set_objective({Rational(1)});
  lp.set_nonnegative(0);
  lp.add_le({Rational(1)}, Rational(-1));
  CHECK(lp_solve(lp).status == LpStatus::Infeasible);
}

TEST_CASE("unbounded: minimize x with x <= 0") {
  LpProblem lp(1);
  lp.set_objective({Rational(1)});
  lp.add_le({Rational(1)}, Rational(0));
  CHECK(lp_solve(lp).status == LpStatus::Unbounded);
}

TEST_CASE("equality system with free variables") {
  // x + y = 2, x - y = 0  ->  x = y = 1
  LpProblem lp(2);
  lp.add_eq({Rational(1), Rational(1)}, Rational(2));
  lp.add_eq({Rational(1), Rational(-1)}, Rational(0));
  auto sol = lp_solve(lp);
  REQUIRE(sol.optimal());
  CHECK(sol.x[0] == Rational(1));
  CHECK(sol.x[1] == Rational(1));
}

TEST_CASE("degenerate constraints do not cycle (Bland)") {
  // classic degenerate vertex: several redundant rows through the origin
  LpProblem lp(2);
  lp.set_objective({Rational(-1), Rational(-1)});
  lp.set_nonnegative(0);
  lp.set_nonnegative(1);
  lp.add_le({Rational(1), Rational(0)}, Rational(0));
  lp.add_le({Rational(0), Rational(1)}, Rational(1));
  lp.add_le({Rational(1), Rational(1)}, Rational(1));
  lp.add_le({Rational(1), Rational(-1)}, Rational(0));
  auto sol = lp_solve(lp);
  REQUIRE(sol.optimal());
  CHECK(sol.value == Rational(-1));  // x=0, y=1
}

TEST_CASE("projection LP for x=(2,0,0) onto a triangle under linf") {
  // min t : -t <= x_i - sum(lambda_k v_ki) <= t, lambda simplex
  std::vector<Point> verts{pt({0, 0, 0}), pt({1, 0, 0}), pt({0, 1, 0})};
  Point x = pt({2, 0, 0});
  const int k = 3;
  LpProblem lp(k + 1);
  for (int i = 0; i < k; ++i) lp.set_nonnegative(i);
  lp.set_nonnegative(k);
  lp.add_eq({Rational(1), Rational(1), Rational(1), Rational(0)}, Rational(1));
  for (int j = 0; j < 3; ++j) {
    std::vector<Rational> hi(k + 1), lo(k + 1);
    for (int i = 0; i < k; ++i) hi[i] = lo[i] = verts[i][j];
    hi[k] = Rational(1);
    lo[k] = Rational(-1);
    lp.add_ge(hi, x[j]);  // z_j + t >= x_j
    lp.add_le(lo, x[j]);  // z_j - t <= x_j
  }
  std::vector<Rational> obj(k + 1);
  obj[k] = 1;
  lp.set_objective(obj);
  auto sol = lp_solve(lp);
  REQUIRE(sol.optimal());
  CHECK(sol.value == Rational(1));
  // minimizer (1,0,0): lambda = e_2
  CHECK(sol.x[1] == Rational(1));

  // independent oracle: dense barycentric grid, step 1/32
  Rational grid = oracles::polytope_grid_distance(verts, x, 32, Norm::Linf);
  CHECK(grid == Rational(1));  // grid contains the exact minimizer here
  CHECK(!(grid < sol.value));  // grid can never beat the exact optimum
}

TEST_CASE("width mismatch throws") {
  LpProblem lp(2);
  CHECK_THROWS_AS(lp.add_le({Rational(1)}, Rational(0)), std::invalid_argument);
  CHECK_THROWS_AS(lp.set_objective({Rational(1)}), std::invalid_argument);
  CHECK_THROWS_AS(lp.set_nonnegative(5), std::invalid_argument);
}

TEST_CASE("random bounded LPs: optimum is feasible and unbeaten by probes") {
  Rng rng(61);
  for (int it = 0; it < 120; ++it) {
    const int n = 2 + static_cast<int>(rng.below(3));
    LpProblem lp(n);
    std::vector<std::vector<Rational>> rows;
    std::vector<Rational> rhs;
    auto add_le = [&](std::vector<Rational> a, Rational b) {
      rows.push_back(a);
      rhs.push_back(b);
      lp.add_le(std::move(a), std::move(b));
    };
    for (int j = 0; j < n; ++j) {
      std::vector<Rational> up(n), dn(n);
      up[j] = 1;
      dn[j] = -1;
      add_le(up, Rational(4));
      add_le(dn, Rational(4));
    }
    for (int i = 0; i < n; ++i) {
      std::vector<Rational> a(n);
      for (int j = 0; j < n; ++j) a[j] = rng.between(Rational(-1), Rational(1), 3);
      add_le(std::move(a), rng.between(Rational(1), Rational(3), 3));
    }
    std::vector<Rational> c(n);
    for (int j = 0; j < n; ++j) c[j] = rng.between(Rational(-2), Rational(2), 3);
    lp.set_objective(c);
    auto sol = lp_solve(lp);
    REQUIRE(sol.status == LpStatus::Optimal);  // the box keeps it bounded, 0 feasible
    // the returned point satisfies every constraint exactly
    for (size_t r = 0; r < rows.size(); ++r) {
      Rational lhs;
      for (int j = 0; j < n; ++j) lhs += rows[r][j] * sol.x[j];
      CHECK(!(rhs[r] < lhs));
    }
    // the reported value is the objective at the point
    Rational val;
    for (int j = 0; j < n; ++j) val += c[j] * sol.x[j];
    CHECK(val == sol.value);
    // random feasible probes never beat it
    for (int probe = 0; probe < 20; ++probe) {
      std::vector<Rational> g(n);
      for (int j = 0; j < n; ++j) g[j] = rng.between(Rational(-4), Rational(4), 3);
      bool feasible = true;
      for (size_t r = 0; r < rows.size() && feasible; ++r) {
        Rational lhs;
        for (int j = 0; j < n; ++j) lhs += rows[r][j] * g[j];
        if (rhs[r] < lhs) feasible = false;
      }
      if (!feasible) continue;
      Rational gval;
      for (int j = 0; j < n; ++j) gval += c[j] * g[j];
      CHECK(!(gval < sol.value));
    }
  }
}

TEST_CASE("lp_range returns exact coordinate extremes") {
  // square [0,1]^2 intersected with x+y <= 3/2
  LpProblem lp(2);
  for (int i = 0; i < 2; ++i) {
    lp.set_nonnegative(i);
    std::vector<Rational> row(2);
    row[i] = 1;
    lp.add_le(row, Rational(1));
  }
  lp.add_le({Rational(1), Rational(1)}, Rational(3, 2));
  auto r = lp_range(lp, {Rational(1), Rational(1)});
  REQUIRE(r.feasible);
  CHECK(r.lo == Rational(0));
  CHECK(r.hi == Rational(3, 2));
}
