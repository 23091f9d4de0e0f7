#include <benchmark/benchmark.h>

#include <random>

#include "cfcolor/colouring.hpp"
#include "cfcolor/geometry.hpp"
#include "cfcolor/validate.hpp"

namespace {

cfc::PointSet random_points(int n, unsigned seed) {
  std::mt19937 rng(seed);
  std::vector<cfc::RawPoint> raw(static_cast<std::size_t>(n));
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (auto& p : raw) p = {unit(rng), unit(rng)};
  return cfc::rank_normalize(raw);
}

void BM_RectangleHypergraph(benchmark::State& state) {
  const auto points = random_points(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(cfc::rectangle_hypergraph(points));
}
BENCHMARK(BM_RectangleHypergraph)->Arg(16)->Arg(32)->Arg(64);

void BM_DiscHypergraph(benchmark::State& state) {
  const auto points = random_points(static_cast<int>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(cfc::disc_hypergraph(points));
}
BENCHMARK(BM_DiscHypergraph)->Arg(8)->Arg(16)->Arg(32);

void BM_BuildG(benchmark::State& state) {
  const auto points = random_points(static_cast<int>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(cfc::build_G(points, 2));
}
BENCHMARK(BM_BuildG)->Arg(16)->Arg(32)->Arg(64);

void BM_RectSubsetCF(benchmark::State& state) {
  const auto points = random_points(static_cast<int>(state.range(0)), 4);
  for (auto _ : state) benchmark::DoNotOptimize(cfc::rect_subset_cf(points, 2));
}
BENCHMARK(BM_RectSubsetCF)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

void BM_TUmColouringIntervals(benchmark::State& state) {
  const auto h = cfc::interval_hypergraph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(cfc::t_um_colouring(h, 2));
}
BENCHMARK(BM_TUmColouringIntervals)->Arg(31)->Arg(63)->Arg(127);

void BM_ValidateSubsetCF(benchmark::State& state) {
  const auto points = random_points(static_cast<int>(state.range(0)), 5);
  const auto h = cfc::rectangle_hypergraph(points);
  const auto result = cfc::rect_subset_cf(points, 2);
  for (auto _ : state) benchmark::DoNotOptimize(cfc::validate_subset_cf(h, result.colouring));
}
BENCHMARK(BM_ValidateSubsetCF)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

void BM_ValidateIntervalUnion(benchmark::State& state) {
  const auto sigma = cfc::interval_union_pairs(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(cfc::validate_interval_union(sigma));
}
BENCHMARK(BM_ValidateIntervalUnion)->Arg(63)->Arg(255)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
