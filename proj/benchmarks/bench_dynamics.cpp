#include "e1am/decay_dynamics.hpp"
#include "e1am/twin_entanglement.hpp"

#include <benchmark/benchmark.h>

using namespace e1am;

static void BM_Calibration(benchmark::State& state) {
  const auto params = decay::params_from_ratio(static_cast<double>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(decay::calibration_constant(params));
}
BENCHMARK(BM_Calibration)->Arg(100)->Arg(1000)->Arg(10000)->Unit(benchmark::kMicrosecond);

// Late times need narrower panels to follow cos((k - omega0) t).
static void BM_NormResidual(benchmark::State& state) {
  const auto params = decay::params_from_ratio(1000.0, 1);
  const decay::DecayModel model(params);
  const double t = static_cast<double>(state.range(0)) / params.gamma;
  for (auto _ : state) benchmark::DoNotOptimize(model.norm_residual(t));
}
BENCHMARK(BM_NormResidual)->Arg(1)->Arg(3)->Arg(10)->Unit(benchmark::kMicrosecond);

static void BM_MaximizeEntanglement(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(twins::maximize_entanglement());
}
BENCHMARK(BM_MaximizeEntanglement)->Unit(benchmark::kMillisecond);

static void BM_SelectionRule(benchmark::State& state) {
  const twins::HamiltonianParams params;
  const auto h = twins::interaction_hamiltonian(std::make_shared<const twins::AtomFieldSpace>(), params);
  for (auto _ : state) benchmark::DoNotOptimize(twins::selection_rule_check(h, params));
}
BENCHMARK(BM_SelectionRule)->Unit(benchmark::kMillisecond);
