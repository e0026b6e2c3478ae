#include <benchmark/benchmark.h>

#include "f1/series.hpp"
#include "f1/zeta.hpp"

namespace {

void BM_ProjectiveGlue(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  f1::F1Scheme pn = f1::proj_space(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(f1::glue(pn));
  }
}
BENCHMARK(BM_ProjectiveGlue)->Arg(2)->Arg(4)->Arg(6);

void BM_ZetaPolynomial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  f1::F1Scheme pn = f1::proj_space(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(f1::zeta_polynomial(pn));
  }
}
BENCHMARK(BM_ZetaPolynomial)->Arg(3)->Arg(6);

void BM_WeilSeries(benchmark::State& state) {
  f1::F1Scheme p3 = f1::proj_space(3);
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(f1::weil_series(p3, 2, order));
  }
}
BENCHMARK(BM_WeilSeries)->Arg(8)->Arg(16)->Arg(32);

void BM_SpectrumFinite(benchmark::State& state) {
  f1::FiniteMonoid m = f1::FiniteMonoid::d_monoid(state.range(0));
  f1::SpectrumLimits lim;
  for (auto _ : state) {
    benchmark::DoNotOptimize(f1::spectrum_finite(m, lim));
  }
}
BENCHMARK(BM_SpectrumFinite)->Arg(8)->Arg(16);

}  // namespace
