#include <benchmark/benchmark.h>

#include <complex>

#include "vmg/density.hpp"
#include "vmg/moments.hpp"
#include "vmg/real_analysis.hpp"
#include "vmg/transform.hpp"

namespace {

void BM_Moments(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(vmg::moments(static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_Moments)->Arg(12)->Arg(40)->Arg(120)->Unit(benchmark::kMillisecond);

void BM_T0Inv(benchmark::State& state) {
  double w = -3.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(vmg::t0_inv(w));
    w = w < 0.5 ? w + 0.01 : -3.0;
  }
}
BENCHMARK(BM_T0Inv);

void BM_FMu(benchmark::State& state) {
  const vmg::PlanePoint z{0.7, 0.3};
  for (auto _ : state) benchmark::DoNotOptimize(vmg::F_mu(z));
}
BENCHMARK(BM_FMu);

void BM_RhoDirect(benchmark::State& state) {
  double x = 0.01;
  for (auto _ : state) {
    benchmark::DoNotOptimize(vmg::rho_direct(x));
    x = x < 1.68 ? x + 0.001 : 0.01;
  }
}
BENCHMARK(BM_RhoDirect);

void BM_QuadMoment(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(vmg::quad_moment(6));
}
BENCHMARK(BM_QuadMoment)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
