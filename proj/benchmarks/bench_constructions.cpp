#include <benchmark/benchmark.h>

#include <string>

#include "kdual/bar.hpp"
#include "kdual/corpus.hpp"
#include "kdual/duality.hpp"
#include "kdual/hochschild.hpp"

namespace {

const char* const kAlgebras[] = {"sphere-odd:3", "proj-plane-like", "sq0:2:-2", "sq0:3:-2"};

void BM_BarHomology(benchmark::State& state) {
  auto entry = kdual::corpus_get(kAlgebras[state.range(0)]);
  state.SetLabel(entry.name);
  for (auto _ : state) {
    auto bar = kdual::bar_construction(entry.algebra, entry.default_window);
    benchmark::DoNotOptimize(kdual::homology_dimensions(bar.complex(), entry.default_window));
  }
}

void BM_HochschildHomology(benchmark::State& state) {
  auto entry = kdual::corpus_get(kAlgebras[state.range(0)]);
  state.SetLabel(entry.name);
  for (auto _ : state) benchmark::DoNotOptimize(kdual::hh_dimensions(entry.algebra, entry.default_window));
}

void BM_HochschildPolynomial(benchmark::State& state) {
  auto a = kdual::corpus_algebra("poly:3");
  auto w = kdual::certify_window(a, 0, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kdual::hh_dimensions(a, w));
}

void BM_Duality(benchmark::State& state) {
  auto a = kdual::corpus_algebra(kAlgebras[state.range(0)]);
  state.SetLabel(a.name());
  const kdual::TruncationWindow w{-6, 6, 0, true};
  for (auto _ : state) benchmark::DoNotOptimize(kdual::verify_thh_duality(a, w));
}

void BM_KoszulDual(benchmark::State& state) {
  auto a = kdual::corpus_algebra(kAlgebras[state.range(0)]);
  state.SetLabel(a.name());
  for (auto _ : state) benchmark::DoNotOptimize(kdual::koszul_dual_covering(a, {0, 8}));
}

}  // namespace

BENCHMARK(BM_BarHomology)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HochschildHomology)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HochschildPolynomial)->DenseRange(8, 24, 8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Duality)->DenseRange(0, 3)->UseRealTime()->Unit(benchmark::kMillisecond);
BENCHMARK(BM_KoszulDual)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
