#include "e1am/radial_fields.hpp"

#include <benchmark/benchmark.h>

using namespace e1am::radial;

static void BM_SphericalBessel(benchmark::State& state) {
  double x = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(spherical_bessel(2, x));
    x = x > 100.0 ? 0.0 : x + 0.37;
  }
}
BENCHMARK(BM_SphericalBessel);

static void BM_NormalizeModes(benchmark::State& state) {
  const auto config = CavityConfig::from_kr(static_cast<double>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(RadialModel(config));
}
BENCHMARK(BM_NormalizeModes)->Arg(20)->Arg(100)->Arg(1000)->Unit(benchmark::kMicrosecond);

static void BM_RadialProfile(benchmark::State& state) {
  const auto config = CavityConfig::from_kr(100.0);
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(radial_profile(config, n));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_RadialProfile)->RangeMultiplier(4)->Range(256, 16384)->Unit(benchmark::kMillisecond);

static void BM_ZoneReport(benchmark::State& state) {
  const auto config = CavityConfig::from_kr(100.0);
  for (auto _ : state) benchmark::DoNotOptimize(zone_report(config));
}
BENCHMARK(BM_ZoneReport)->Unit(benchmark::kMillisecond);
