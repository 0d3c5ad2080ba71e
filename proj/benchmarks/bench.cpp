#include <benchmark/benchmark.h>

#include "rsnum/circle.hpp"
#include "rsnum/eisenstein.hpp"
#include "rsnum/index.hpp"
#include "rsnum/special.hpp"
#include "rsnum/trilinear.hpp"

using namespace rsnum;

static void BM_LogGamma(benchmark::State& state) {
  cplx z(0.75, 35.0);
  for (auto _ : state) benchmark::DoNotOptimize(log_gamma(z));
}
BENCHMARK(BM_LogGamma);

static void BM_BesselK(benchmark::State& state) {
  cplx nu(0.0, double(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(bessel_k_scaled(nu, 2.0));
}
BENCHMARK(BM_BesselK)->Arg(5)->Arg(20);

static void BM_CosPowerCoeffs(benchmark::State& state) {
  cplx w(0.5, 20.0);
  for (auto _ : state)
    benchmark::DoNotOptimize(cos_power_coeffs(w, int(state.range(0))));
}
BENCHMARK(BM_CosPowerCoeffs)->Arg(128)->Arg(1024);

static void BM_CSequence(benchmark::State& state) {
  SpectralPoint pt;
  pt.s = {0.75, double(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(c_sequence(pt, 0));
}
BENCHMARK(BM_CSequence)->Arg(5)->Arg(50)->Unit(benchmark::kMillisecond);

static void BM_IndexValue(benchmark::State& state) {
  SpectralPoint pt;
  pt.s = {0.75, double(state.range(0))};
  pt.lambda1 = 1.0;
  pt.lambda2 = 2.0;
  for (auto _ : state) benchmark::DoNotOptimize(index_value(pt));
}
BENCHMARK(BM_IndexValue)->Arg(20)->Arg(100)->Unit(benchmark::kMillisecond);

static void BM_EisensteinFourier(benchmark::State& state) {
  UpperHalfPoint z{0.3, 1.2};
  cplx s(0.5, double(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(eval_fourier_expansion(z, s));
}
BENCHMARK(BM_EisensteinFourier)->Arg(10)->Arg(40)->Unit(benchmark::kMicrosecond);

static void BM_EisensteinLattice(benchmark::State& state) {
  UpperHalfPoint z{0.3, 1.2};
  cplx s(1.5, 2.0);
  for (auto _ : state) benchmark::DoNotOptimize(eval_lattice_sum(z, s));
}
BENCHMARK(BM_EisensteinLattice)->Unit(benchmark::kMicrosecond);

static void BM_SupnormProfile(benchmark::State& state) {
  cplx s(0.5, 20.0);
  for (auto _ : state) benchmark::DoNotOptimize(fourier_profile(1.1, s));
}
BENCHMARK(BM_SupnormProfile)->Unit(benchmark::kMicrosecond);

static void BM_TrilinearQuadrature(benchmark::State& state) {
  SpectralPoint pt;
  pt.s = {0.75, 0.0};
  pt.lambda1 = 1.0;
  pt.lambda2 = 2.0;
  auto f1 = spherical_vector(pt.lambda1);
  auto f2 = spherical_vector(pt.lambda2);
  CoefficientSequence phi(0, Parity::even_fn);
  phi.at(0) = 1.0;
  QuadratureSpec spec;
  spec.abs_tol = 1e-8;
  for (auto _ : state)
    benchmark::DoNotOptimize(tr_rs_quadrature(f1, f2, phi, pt, spec));
}
BENCHMARK(BM_TrilinearQuadrature)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
