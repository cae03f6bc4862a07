#include <benchmark/benchmark.h>

#include "ptsech/specfun.hpp"

using namespace ptsech;
using namespace ptsech::specfun;

static void BM_LogGamma(benchmark::State& state) {
  cplx z(3.7, -12.5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(log_gamma(z));
    z += cplx(1e-9, 0.0);
  }
}
BENCHMARK(BM_LogGamma);

static void BM_LogGammaReflected(benchmark::State& state) {
  const cplx z(-7.3, 0.4);
  for (auto _ : state) benchmark::DoNotOptimize(log_gamma(z));
}
BENCHMARK(BM_LogGammaReflected);

static void BM_Hypergeometric(benchmark::State& state, cplx z) {
  const HypergeometricArgs args{cplx(0.3, 0.2), cplx(-0.7, 0.5), cplx(1.1, -0.3), z};
  for (auto _ : state) benchmark::DoNotOptimize(gauss_2f1(args));
}
BENCHMARK_CAPTURE(BM_Hypergeometric, series, cplx(0.4, 0.3));
BENCHMARK_CAPTURE(BM_Hypergeometric, pfaff, cplx(-2.0, 0.5));
BENCHMARK_CAPTURE(BM_Hypergeometric, one_minus_z, cplx(0.9, 0.2));
BENCHMARK_CAPTURE(BM_Hypergeometric, inversion, cplx(3.0, 4.0));
BENCHMARK_CAPTURE(BM_Hypergeometric, continuation, cplx(0.5, 0.95));

static void BM_Jacobi(benchmark::State& state) {
  const unsigned n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(jacobi_poly(n, cplx(-1.0, 4.0), -1.0, cplx(0.3, -0.2)));
}
BENCHMARK(BM_Jacobi)->Arg(2)->Arg(8)->Arg(20);

BENCHMARK_MAIN();
