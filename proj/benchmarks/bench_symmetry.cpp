#include <benchmark/benchmark.h>

#include "maniforge/constructions.hpp"
#include "maniforge/symmetry.hpp"

using namespace maniforge;

static void BM_AutOrderBbar(benchmark::State& state) {
  const auto m = build_Bn_bar(static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(aut_order(m));
}
BENCHMARK(BM_AutOrderBbar)->DenseRange(1, 5);

static void BM_SelfDualB(benchmark::State& state) {
  const auto m = build_B();
  for (auto _ : state) benchmark::DoNotOptimize(is_self_dual(m));
}
BENCHMARK(BM_SelfDualB);

static void BM_AutOrderRaviolo(benchmark::State& state) {
  const auto m = raviolo(build_Bn_bar(2));
  for (auto _ : state) benchmark::DoNotOptimize(aut_order(m));
}
BENCHMARK(BM_AutOrderRaviolo);
