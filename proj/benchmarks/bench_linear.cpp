#include <benchmark/benchmark.h>

#include <random>

#include "kdual/linear.hpp"
#include "kdual/sparse_matrix.hpp"

namespace {

kdual::SparseMatrix random_matrix(const kdual::FieldSpec& field, std::size_t n, double density) {
  std::mt19937_64 rng(n);
  std::bernoulli_distribution keep(density);
  std::uniform_int_distribution<int> value(-3, 3);
  kdual::SparseMatrix::Builder b(field, n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (keep(rng)) b.add(r, c, mpq_class(value(rng)));
  return std::move(b).build();
}

void rank_over(benchmark::State& state, const kdual::FieldSpec& field) {
  auto m = random_matrix(field, static_cast<std::size_t>(state.range(0)), 0.05);
  for (auto _ : state) benchmark::DoNotOptimize(kdual::rank(m));
  state.SetComplexityN(state.range(0));
}

void BM_RankRationals(benchmark::State& state) { rank_over(state, kdual::FieldSpec::rationals()); }
void BM_RankF2(benchmark::State& state) { rank_over(state, kdual::FieldSpec::prime(2)); }
void BM_RankF101(benchmark::State& state) { rank_over(state, kdual::FieldSpec::prime(101)); }

void BM_KernelRationals(benchmark::State& state) {
  auto m = random_matrix(kdual::FieldSpec::rationals(), static_cast<std::size_t>(state.range(0)), 0.05);
  for (auto _ : state) benchmark::DoNotOptimize(kdual::kernel_basis(m));
}

}  // namespace

BENCHMARK(BM_RankRationals)->RangeMultiplier(2)->Range(32, 256);
BENCHMARK(BM_RankF2)->RangeMultiplier(2)->Range(32, 512);
BENCHMARK(BM_RankF101)->RangeMultiplier(2)->Range(32, 512);
BENCHMARK(BM_KernelRationals)->RangeMultiplier(2)->Range(32, 128);

BENCHMARK_MAIN();
