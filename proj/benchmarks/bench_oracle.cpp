#include <benchmark/benchmark.h>

#include "f1/oracle.hpp"

namespace {

void BM_OracleAffine(benchmark::State& state) {
  // k^n assignments over the free chart of affine n-space.
  const int n = static_cast<int>(state.range(0));
  const long long k = state.range(1);
  f1::F1Scheme an = f1::affine_space(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(f1::scheme_oracle_count(an, k));
  }
}
BENCHMARK(BM_OracleAffine)->Args({3, 16})->Args({4, 16})->Args({4, 32});

void BM_OracleProjective(benchmark::State& state) {
  f1::F1Scheme p2 = f1::proj_space(2);
  const long long k = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(f1::scheme_oracle_count(p2, k));
  }
}
BENCHMARK(BM_OracleProjective)->Arg(8)->Arg(16)->Arg(32);

}  // namespace
