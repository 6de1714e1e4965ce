#include <benchmark/benchmark.h>

#include "sunlab/projection.hpp"
#include "sunlab/rng.hpp"
#include "sunlab/scenario_lab.hpp"

using namespace sunlab;

namespace {

SetModel cross_scene() {
  FamilySpec spec;
  spec.family = Family::MainCross;
  spec.extent = Rational(4);
  return generate(spec, 1);
}

SetModel cocross_scene() {
  FamilySpec spec;
  spec.family = Family::MainCocross;
  spec.extent = Rational(2);
  return generate(spec, 1);
}

std::vector<Point> query_points(int n) {
  Rng rng(99);
  std::vector<Point> out;
  for (int i = 0; i < n; ++i) {
    std::vector<Rational> c(3);
    for (int j = 0; j < 3; ++j) c[j] = rng.between(Rational(-5), Rational(5), 4);
    out.push_back(Point(std::move(c)));
  }
  return out;
}

void BM_ProjectCross(benchmark::State& state) {
  SetModel m = cross_scene();
  auto qs = query_points(64);
  size_t i = 0;
  for (auto _ : state) {
    auto pr = project(m, qs[i++ % qs.size()], Norm::Linf);
    benchmark::DoNotOptimize(pr.rho);
  }
}
BENCHMARK(BM_ProjectCross);

void BM_ProjectCocross(benchmark::State& state) {
  SetModel m = cocross_scene();
  auto qs = query_points(64);
  size_t i = 0;
  for (auto _ : state) {
    auto pr = project(m, qs[i++ % qs.size()], Norm::Linf);
    benchmark::DoNotOptimize(pr.rho);
  }
}
BENCHMARK(BM_ProjectCocross);

void BM_ProjectPolytope(benchmark::State& state) {
  std::vector<Point> verts;
  Rng rng(3);
  for (int v = 0; v < static_cast<int>(state.range(0)); ++v) {
    std::vector<Rational> c(3);
    for (int j = 0; j < 3; ++j) c[j] = rng.between(Rational(-1), Rational(1), 3);
    verts.push_back(Point(std::move(c)));
  }
  SetModel m(3, "poly", {Polytope{verts}});
  auto qs = query_points(64);
  size_t i = 0;
  for (auto _ : state) {
    auto pr = project(m, qs[i++ % qs.size()], Norm::Linf);
    benchmark::DoNotOptimize(pr.rho);
  }
}
BENCHMARK(BM_ProjectPolytope)->Arg(4)->Arg(8)->Arg(16);

void BM_SegmentInside(benchmark::State& state) {
  SetModel m = cocross_scene();
  auto qs = query_points(64);
  size_t i = 0;
  for (auto _ : state) {
    const Point& a = qs[i % qs.size()];
    const Point& b = qs[(i + 1) % qs.size()];
    ++i;
    benchmark::DoNotOptimize(segment_inside(m, a, b));
  }
}
BENCHMARK(BM_SegmentInside);

}  // namespace
