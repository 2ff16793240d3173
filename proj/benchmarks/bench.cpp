#include "topo/cubical_collapse.hpp"
#include "topo/gallery.hpp"
#include "topo/hudson.hpp"
#include "topo/morse.hpp"
#include "topo/search.hpp"
#include "topo/star_shaped.hpp"
#include "topo/subdivision.hpp"

#include <benchmark/benchmark.h>

using namespace topo;

static void BM_Subdivide(benchmark::State& state) {
  GeometricComplex G = gallery::random_convex(static_cast<int>(state.range(0)), 3, 1);
  for (auto _ : state) benchmark::DoNotOptimize(sd(G));
}
BENCHMARK(BM_Subdivide)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

static void BM_GradientMatching(benchmark::State& state) {
  GeometricComplex G = gallery::random_convex(static_cast<int>(state.range(0)), 2, 3);
  Vec w = G.barycenter(G.complex.facets()[0]);
  for (auto _ : state) {
    MorseMatching M = gradient_matching(G.complex, distance_oracle(G, w));
    benchmark::DoNotOptimize(M);
  }
}
BENCHMARK(BM_GradientMatching)->Arg(10)->Arg(30)->Unit(benchmark::kMillisecond);

static void BM_CollapseSearch(benchmark::State& state) {
  SimplicialComplex C = sd(gallery::simplex(static_cast<int>(state.range(0))).complex).complex;
  for (auto _ : state) benchmark::DoNotOptimize(collapse_search(C, std::nullopt));
}
BENCHMARK(BM_CollapseSearch)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_NonEvasive(benchmark::State& state) {
  SimplicialComplex C = sd(gallery::simplex(static_cast<int>(state.range(0))).complex).complex;
  for (auto _ : state) benchmark::DoNotOptimize(is_non_evasive(C));
}
BENCHMARK(BM_NonEvasive)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_CubicalCollapse(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  CubicalComplex K = gallery::grid(n, n);
  for (auto _ : state) benchmark::DoNotOptimize(collapse_cubical_cat0(K, 0));
}
BENCHMARK(BM_CubicalCollapse)->Arg(3)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_ConvexCollapse(benchmark::State& state) {
  GeometricComplex G = gallery::random_stellar(3, static_cast<int>(state.range(0)), 5);
  for (auto _ : state) benchmark::DoNotOptimize(collapse_convex(G));
}
BENCHMARK(BM_ConvexCollapse)->Arg(2)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_StarShaped(benchmark::State& state) {
  GeometricComplex G = gallery::lshape_3d(2);
  Vec x = gallery::lshape_center(3);
  for (auto _ : state) benchmark::DoNotOptimize(collapse_star_shaped(G, x));
}
BENCHMARK(BM_StarShaped)->Unit(benchmark::kMillisecond)->Iterations(2);

BENCHMARK_MAIN();
