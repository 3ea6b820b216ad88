#include <benchmark/benchmark.h>

#include <vector>

#include "distlat/distlat.hpp"

using namespace distlat;

static void BM_CanonicalMeasures(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const Simplex s = distorted_simplex(canonical_simplex(d), {d, 0.45});
  for (auto _ : state) benchmark::DoNotOptimize(simplex_measures(s));
}
BENCHMARK(BM_CanonicalMeasures)->DenseRange(2, 8, 3);

static void BM_QualityRecord(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(quality_record(d, DeltaValue::of(0.45)));
}
BENCHMARK(BM_QualityRecord)->Arg(2)->Arg(8)->Arg(32);

static void BM_ProtectionOracle(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(protection_oracle(d, DeltaValue::of(0.8), 3, kDefaultTolerance, false));
}
BENCHMARK(BM_ProtectionOracle)->DenseRange(2, 6, 1)->Unit(benchmark::kMillisecond);

static void BM_UniformProtection(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(uniform_protection_check(d, DeltaValue::of(0.3)));
}
BENCHMARK(BM_UniformProtection)->DenseRange(2, 5, 1)->Unit(benchmark::kMillisecond);

static void BM_ShortestVector(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const LatticeSpec spec = distorted_grid_basis({d, 0.5});
  for (auto _ : state) benchmark::DoNotOptimize(shortest_vector(spec, 4));
}
BENCHMARK(BM_ShortestVector)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);

static void BM_FigureSweep(benchmark::State& state) {
  const std::vector<int> dims{2, 3, 4, 8, 16, 32};
  std::vector<double> deltas;
  for (int k = 1; k <= 500; ++k) deltas.push_back(k / 500.0);
  for (auto _ : state) benchmark::DoNotOptimize(figure_sweep(dims, deltas, true));
}
BENCHMARK(BM_FigureSweep)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
