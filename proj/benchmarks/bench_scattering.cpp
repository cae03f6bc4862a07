#include <benchmark/benchmark.h>

#include <cmath>

#include "ptsech/analytic.hpp"
#include "ptsech/bound.hpp"
#include "ptsech/oracle.hpp"

using namespace ptsech;

static void BM_ClosedFormScattering(benchmark::State& state) {
  const PotentialSpec spec(1.0, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(scattering_coefficients(derive_params(2.0, spec, Branch::ConjK)));
}
BENCHMARK(BM_ClosedFormScattering);

static void BM_Wavefunction(benchmark::State& state) {
  const DerivedParams d = derive_params(2.0, PotentialSpec(1.0, 1.0), Branch::ConjK);
  for (auto _ : state) benchmark::DoNotOptimize(wavefunction_with_derivative(1.3, {}, d));
}
BENCHMARK(BM_Wavefunction);

static void BM_OracleScattering(benchmark::State& state) {
  const PotentialSpec spec(1.0, 1.0);
  oracle::OracleOptions opts;
  opts.tol = std::pow(10.0, -static_cast<double>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(oracle::numeric_scattering(spec, 2.0, Branch::ConjK, opts));
}
BENCHMARK(BM_OracleScattering)->Arg(10)->Arg(13)->Unit(benchmark::kMillisecond);

static void BM_PoleScan(benchmark::State& state) {
  const PotentialSpec spec(2.0, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(pole_scan(spec, -5.0, 5.0, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_PoleScan)->Arg(201)->Arg(2001)->Unit(benchmark::kMillisecond);

static void BM_Shooting(benchmark::State& state) {
  const oracle::Problem well = oracle::testing::sech_squared_well(2.5, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(oracle::shoot_bound_states(well, -8.0, -0.1, 40, 1e-10));
}
BENCHMARK(BM_Shooting)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
