#include <benchmark/benchmark.h>

#include "sunlab/lp.hpp"
#include "sunlab/rng.hpp"

using namespace sunlab;

namespace {

// Random bounded LP: minimize c.x over a box intersected with halfspaces.
LpProblem random_lp(Rng& rng, int n, int m) {
  LpProblem lp(n);
  std::vector<Rational> c(n);
  for (int j = 0; j < n; ++j) {
    c[j] = rng.between(Rational(-2), Rational(2), 3);
    std::vector<Rational> row(n);
    row[j] = 1;
    lp.add_ge(row, Rational(-4));
    lp.add_le(row, Rational(4));
  }
  lp.set_objective(c);
  for (int i = 0; i < m; ++i) {
    std::vector<Rational> row(n);
    for (int j = 0; j < n; ++j) row[j] = rng.between(Rational(-1), Rational(1), 3);
    lp.add_le(row, rng.between(Rational(1), Rational(3), 3));
  }
  return lp;
}

void BM_SimplexSmall(benchmark::State& state) {
  Rng rng(17);
  const int n = static_cast<int>(state.range(0));
  std::vector<LpProblem> problems;
  for (int i = 0; i < 32; ++i) problems.push_back(random_lp(rng, n, 2 * n));
  size_t i = 0;
  for (auto _ : state) {
    auto sol = lp_solve(problems[i++ % problems.size()]);
    benchmark::DoNotOptimize(sol.status);
  }
}
BENCHMARK(BM_SimplexSmall)->Arg(3)->Arg(6)->Arg(10);

}  // namespace

BENCHMARK_MAIN();
