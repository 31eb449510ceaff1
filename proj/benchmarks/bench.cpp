// Microbenchmarks for the hot evaluation paths. The fuzz corpora in the test
// suite lean on these being fast, so regressions show up here first.
#include <benchmark/benchmark.h>

#include <vector>

#include <aniso/aniso_measure.hpp>
#include <aniso/perimeter.hpp>
#include <aniso/rigidity.hpp>
#include <aniso/steiner.hpp>

#include "support/corpus.hpp"

using namespace aniso;

namespace {

std::vector<Vec2> sample_directions(int n) {
  corpus::Rng rng(42);
  std::vector<Vec2> dirs;
  std::uniform_real_distribution<double> s(0.1, 3.0);
  for (int i = 0; i < n; ++i)
    dirs.push_back(corpus::random_direction(rng) * s(rng));
  return dirs;
}

void bm_support_polygon(benchmark::State& state) {
  corpus::Rng rng(1);
  ConvexBody K = corpus::random_polygon(rng, static_cast<int>(state.range(0)));
  auto dirs = sample_directions(1024);
  size_t i = 0;
  for (auto _ : state)
    benchmark::DoNotOptimize(support_eval(K, dirs[i++ & 1023]));
}

void bm_gauge_polygon(benchmark::State& state) {
  corpus::Rng rng(2);
  ConvexBody K = corpus::random_polygon(rng, static_cast<int>(state.range(0)));
  auto dirs = sample_directions(1024);
  size_t i = 0;
  for (auto _ : state)
    benchmark::DoNotOptimize(gauge_eval(K, dirs[i++ & 1023]));
}

void bm_support_ellipse(benchmark::State& state) {
  ConvexBody K = ConvexBody::ellipse(1.7, 0.6);
  auto dirs = sample_directions(1024);
  size_t i = 0;
  for (auto _ : state)
    benchmark::DoNotOptimize(support_eval(K, dirs[i++ & 1023]));
}

void bm_polar(benchmark::State& state) {
  corpus::Rng rng(3);
  ConvexBody K = corpus::random_polygon(rng, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(polar(K));
}

void bm_steiner_symmetrize(benchmark::State& state) {
  corpus::Rng rng(4);
  ConvexBody K = corpus::random_polygon(rng, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(steiner_symmetrize(K));
}

void bm_perimeter_formula(benchmark::State& state) {
  corpus::Rng rng(5);
  auto S = corpus::random_vb_pair(rng);
  ConvexBody K = corpus::random_symmetral_polygon(rng);
  for (auto _ : state) benchmark::DoNotOptimize(perimeter_from_vb(S, K));
}

void bm_perimeter_oracle(benchmark::State& state) {
  corpus::Rng rng(5);  // same draw as the formula benchmark
  auto S = corpus::random_vb_pair(rng);
  ConvexBody K = corpus::random_symmetral_polygon(rng);
  for (auto _ : state)
    benchmark::DoNotOptimize(polygon_perimeter(polygonize(S), K));
}

void bm_rigidity_verdict(benchmark::State& state) {
  corpus::Rng rng(6);
  SbvProfile v = corpus::random_section_profile(rng);
  ConvexBody K = corpus::random_symmetral_polygon(rng);
  for (auto _ : state) benchmark::DoNotOptimize(verdict(v, K));
}

void bm_sup_partition(benchmark::State& state) {
  corpus::Rng rng(7);
  auto mu = corpus::random_atomic_measure(rng, 2);
  ConvexBody K = corpus::random_polygon(rng);
  const IntervalSet G(-1.25, 1.25);
  const int depth = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(sup_partition_oracle(mu, K, G, depth));
}

}  // namespace

BENCHMARK(bm_support_polygon)->Arg(8)->Arg(64);
BENCHMARK(bm_gauge_polygon)->Arg(8)->Arg(64);
BENCHMARK(bm_support_ellipse);
BENCHMARK(bm_polar)->Arg(8)->Arg(64);
BENCHMARK(bm_steiner_symmetrize)->Arg(8)->Arg(64);
BENCHMARK(bm_perimeter_formula);
BENCHMARK(bm_perimeter_oracle);
BENCHMARK(bm_rigidity_verdict);
BENCHMARK(bm_sup_partition)->Arg(8)->Arg(12);

BENCHMARK_MAIN();
