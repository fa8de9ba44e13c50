#include <benchmark/benchmark.h>

#include "cesaro/averaging.hpp"
#include "cesaro/combinat.hpp"
#include "cesaro/formal.hpp"
#include "cesaro/fourier.hpp"
#include "cesaro/special.hpp"
#include "cesaro/zetafns.hpp"

using namespace cesaro;
using cplx = std::complex<double>;

static void BM_Zeta(benchmark::State& state) {
  const cplx s(0.5, 14.0 + state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(special::zeta(s));
}
BENCHMARK(BM_Zeta)->Arg(0)->Arg(100);

static void BM_QcheckRho(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(formal::qcheck_rho(cplx(0.5, 0.3), 0.37));
}
BENCHMARK(BM_QcheckRho);

static void BM_HurwitzTaylor(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(zetafns::hurwitz_taylor(cplx(0.7, 0.2), -0.3));
}
BENCHMARK(BM_HurwitzTaylor);

static void BM_HurwitzAsymptotic(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(zetafns::hurwitz_asymptotic(2.5, -0.5));
}
BENCHMARK(BM_HurwitzAsymptotic);

static void BM_HurwitzCesaro(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(zetafns::hurwitz_cesaro(0.3, -0.5, static_cast<double>(state.range(0))));
}
BENCHMARK(BM_HurwitzCesaro)->Arg(250)->Arg(1000)->Unit(benchmark::kMillisecond);

// One numeric P pass over [0, X] at 64 samples per unit.
static void BM_ApplyP(benchmark::State& state) {
  summation::Term t;
  t.coeff = 1.0;
  t.x_power = 0.5;
  t.scale_index = 1;
  auto g = summation::sample(summation::TermSum({t}), static_cast<double>(state.range(0)), 1.0 / 64);
  for (auto _ : state) benchmark::DoNotOptimize(summation::apply_P_numeric(g));
  state.SetItemsProcessed(state.iterations() * state.range(0) * 64);
}
BENCHMARK(BM_ApplyP)->Arg(100)->Arg(1000);

static void BM_FourierQuadrature(benchmark::State& state) {
  const cplx rho = state.range(0) ? cplx(-0.5) : cplx(1.3, 0.4);
  for (auto _ : state) benchmark::DoNotOptimize(fourier::fourier_coeff_quadrature(rho, 3));
}
BENCHMARK(BM_FourierQuadrature)->Arg(0)->Arg(1);

static void BM_FourierClosed(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(fourier::fourier_coeff_closed(cplx(1.3, 0.4), 3));
}
BENCHMARK(BM_FourierClosed);

static void BM_Triangle(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(combinat::triangle(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_Triangle)->Arg(30)->Arg(100);

BENCHMARK_MAIN();
