#include "e1am/angular_algebra.hpp"
#include "e1am/matrix_exp.hpp"

#include <benchmark/benchmark.h>

using namespace e1am;

static void BM_BuildSpace(benchmark::State& state) {
  const int cutoff = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(photon_mode_space(cutoff));
}
BENCHMARK(BM_BuildSpace)->DenseRange(1, 6);

static void BM_JOperators(benchmark::State& state) {
  auto space = photon_mode_space(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(j_operators(space));
  state.counters["dim"] = static_cast<double>(space->dim());
}
BENCHMARK(BM_JOperators)->DenseRange(1, 6);

static void BM_VerifySu2(benchmark::State& state) {
  const auto j = j_operators(photon_mode_space(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(verify_su2(j));
}
BENCHMARK(BM_VerifySu2)->DenseRange(1, 5);

static void BM_Su3Generators(benchmark::State& state) {
  auto space = photon_mode_space(3);
  for (auto _ : state) benchmark::DoNotOptimize(su3_generators(space));
}
BENCHMARK(BM_Su3Generators);

// Propagator size of the atom + two-photon problem is 56; the others bracket it.
static void BM_Expm(benchmark::State& state) {
  const auto n = static_cast<Eigen::Index>(state.range(0));
  Matrix h = Matrix::Random(n, n);
  h = (h + h.adjoint()).eval();
  for (auto _ : state) benchmark::DoNotOptimize(propagator(h, 10.0));
}
BENCHMARK(BM_Expm)->Arg(8)->Arg(20)->Arg(56)->Arg(120)->Unit(benchmark::kMicrosecond);
