// Serial reference vs OpenMP grid fills for the main kernels.

#include <benchmark/benchmark.h>

#include "quench/classical.hpp"
#include "quench/free_evolution.hpp"
#include "quench/harmonic_quench.hpp"
#include "quench/wigner.hpp"

namespace {

quench::Exec exec_of(const benchmark::State& state) {
  return state.range(0) ? quench::Exec::Parallel : quench::Exec::Serial;
}

void BM_DensityProfile(benchmark::State& state) {
  const auto w = quench::well::WellState::infinite();
  const quench::SpatialGrid grid(-6.0, 6.0, 241);
  for (auto _ : state) {
    auto d = quench::free::density_profile(w, 0.14, grid, quench::free::EvolutionMethod::MomentumIntegral,
                                           {}, exec_of(state));
    benchmark::DoNotOptimize(d.values.data());
  }
}

void BM_WignerField(benchmark::State& state) {
  const auto w = quench::well::WellState::infinite();
  const quench::SpatialGrid x(-1.2, 1.2, 201);
  const quench::MomentumGrid k(-15.0, 15.0, 401);
  for (auto _ : state) {
    auto f = quench::wigner::wigner_field(w, quench::wigner::WignerSource::ClosedFormInfiniteWell, x, k, {},
                                          exec_of(state));
    benchmark::DoNotOptimize(f.values.data());
  }
}

void BM_WignerQuadrature(benchmark::State& state) {
  const auto w = quench::well::WellState::finite(quench::kPi / 3.0);
  const quench::SpatialGrid x(-1.2, 1.2, 25);
  const quench::MomentumGrid k(-6.0, 6.0, 25);
  for (auto _ : state) {
    auto f = quench::wigner::wigner_field(w, quench::wigner::WignerSource::QuadratureFromPsi, x, k, {},
                                          exec_of(state));
    benchmark::DoNotOptimize(f.values.data());
  }
}

void BM_ClassicalProfile(benchmark::State& state) {
  const auto e = quench::classical::ClassicalEnsemble::from_well(quench::well::WellState::infinite());
  const quench::SpatialGrid grid(-6.0, 6.0, 241);
  for (auto _ : state) {
    auto d = quench::classical::classical_free_profile(e, 0.5, grid, quench::classical::FreeRoute::PositionFirst,
                                                       {}, exec_of(state));
    benchmark::DoNotOptimize(d.values.data());
  }
}

void BM_ExcitedHarmonicDensity(benchmark::State& state) {
  const auto p = quench::harmonic::QuenchParams::with_shift(1.0, 0.5, 1.0);
  const quench::SpatialGrid grid(-8.0, 10.0, 181);
  for (auto _ : state) {
    auto d = quench::harmonic::density(p, 1.3, grid, quench::harmonic::InitialLevel::Second, {}, exec_of(state));
    benchmark::DoNotOptimize(d.values.data());
  }
}

}  // namespace

BENCHMARK(BM_DensityProfile)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_WignerField)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_WignerQuadrature)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ClassicalProfile)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ExcitedHarmonicDensity)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
