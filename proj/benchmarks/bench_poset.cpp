#include <benchmark/benchmark.h>

#include "maniforge/constructions.hpp"
#include "maniforge/poset.hpp"

using namespace maniforge;

static void BM_CipBbar(benchmark::State& state) {
  const auto m = build_Bn_bar(static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(has_cip(m));
}
BENCHMARK(BM_CipBbar)->DenseRange(1, 5);

static void BM_CipBn(benchmark::State& state) {
  const auto m = build_Bn(static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(has_cip(m));
}
BENCHMARK(BM_CipBn)->DenseRange(1, 5);

static void BM_StrongBbar(benchmark::State& state) {
  const auto p = build_poset(build_Bn_bar(static_cast<std::uint32_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(is_strongly_connected(p));
}
BENCHMARK(BM_StrongBbar)->DenseRange(1, 5);

static void BM_ThinBbar(benchmark::State& state) {
  const auto m = build_Bn_bar(static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(is_thin(m));
}
BENCHMARK(BM_ThinBbar)->DenseRange(1, 5);
