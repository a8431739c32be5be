#include <benchmark/benchmark.h>

#include "maniforge/constructions.hpp"
#include "maniforge/presentation.hpp"

using namespace maniforge;

static void BM_CosetsB(benchmark::State& state) {
  const auto p = b_presentation();
  for (auto _ : state) benchmark::DoNotOptimize(coset_enumerate(p));
}
BENCHMARK(BM_CosetsB);

static void BM_Cosets24Cell(benchmark::State& state) {
  const auto p = string_presentation({3, 4, 3});
  for (auto _ : state) benchmark::DoNotOptimize(coset_enumerate(p));
}
BENCHMARK(BM_Cosets24Cell);

static void BM_CosetsPolygon(benchmark::State& state) {
  const auto p = polygon_presentation(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(coset_enumerate(p));
}
BENCHMARK(BM_CosetsPolygon)->RangeMultiplier(4)->Range(4, 1024);
