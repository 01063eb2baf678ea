// Serial reference paths against the OpenMP kernels.

#include <benchmark/benchmark.h>

#include "zmt/pipeline.hpp"
#include "zmt/simulate.hpp"
#include "zmt/spectral.hpp"
#include "zmt/zm_model.hpp"

namespace {

void BM_BlocksParallel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(zmt::building_blocks(0.7, n));
}

void BM_BlocksReference(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(zmt::reference::building_blocks(0.7, n));
}

void BM_QMatrixParallel(benchmark::State& state) {
  const auto bb = zmt::building_blocks(0.7, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(zmt::q_matrix(bb));
}

void BM_QMatrixReference(benchmark::State& state) {
  const auto bb = zmt::building_blocks(0.7, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(zmt::reference::q_matrix(bb));
}

void BM_CurveParallel(benchmark::State& state) {
  const auto p = zmt::ZMParams::make(0.8, 3.0);
  for (auto _ : state) benchmark::DoNotOptimize(zmt::expected_distinct_curve(p, state.range(0)));
}

void BM_CurveReference(benchmark::State& state) {
  const auto p = zmt::ZMParams::make(0.8, 3.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(zmt::reference::expected_distinct_curve(p, state.range(0)));
  }
}

const zmt::SpectralDecomposition& spectrum() {
  static const auto spec = zmt::spectral_decomposition({0.7, zmt::kDefaultBasisSize});
  return spec;
}

void BM_MonteCarloParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(zmt::mc_quadratic_form(spectrum(), state.range(0), 1));
}

void BM_MonteCarloReference(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(zmt::reference::mc_quadratic_form(spectrum(), state.range(0), 1));
  }
}

zmt::SimConfig experiment_config() {
  zmt::SimConfig cfg;
  cfg.params = zmt::ZMParams::make(0.8, 3.0);
  cfg.n = 2000;
  cfg.reps = 16;
  cfg.seed = 5;
  return cfg;
}

// The cache is warmed on the first iteration in both variants.
void BM_ExperimentParallel(benchmark::State& state) {
  zmt::SpectralCache cache;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        zmt::null_pvalue_experiment(experiment_config(), zmt::Alternative::kNone, {}, cache));
  }
}

void BM_ExperimentReference(benchmark::State& state) {
  zmt::SpectralCache cache;
  for (auto _ : state) {
    benchmark::DoNotOptimize(zmt::reference::null_pvalue_experiment(
        experiment_config(), zmt::Alternative::kNone, {}, cache));
  }
}

}  // namespace

BENCHMARK(BM_BlocksParallel)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BlocksReference)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_QMatrixParallel)->Arg(100)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_QMatrixReference)->Arg(100)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CurveParallel)->Arg(20000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CurveReference)->Arg(20000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MonteCarloParallel)->Arg(100000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MonteCarloReference)->Arg(100000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ExperimentParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ExperimentReference)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
