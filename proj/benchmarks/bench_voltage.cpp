#include <benchmark/benchmark.h>

#include "maniforge/constructions.hpp"
#include "maniforge/voltage.hpp"

using namespace maniforge;

static void BM_CoverZeta(benchmark::State& state) {
  const auto& fam = b_family();
  const auto z = zeta_n(fam.b, fam.support, static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(cover_is_maniplex(z));
}
BENCHMARK(BM_CoverZeta)->DenseRange(1, 5);

static void BM_FibreProfile(benchmark::State& state) {
  const auto& fam = b_family();
  const auto z = zeta_n(fam.b, fam.support, static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(fibre_profile(z));
}
BENCHMARK(BM_FibreProfile)->DenseRange(1, 5);

static void BM_SupportSearch(benchmark::State& state) {
  const auto& fam = b_family();
  for (auto _ : state) benchmark::DoNotOptimize(find_voltage_support(fam.b, fam.e1, fam.e2));
}
BENCHMARK(BM_SupportSearch);
