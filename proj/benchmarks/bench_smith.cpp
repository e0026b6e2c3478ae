#include <benchmark/benchmark.h>

#include <random>

#include "f1/smith.hpp"

namespace {

f1::IntMatrix random_matrix(int n, int seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> entry(-9, 9);
  f1::IntMatrix m(n, n);
  for (f1::Int& e : m.entries) e = entry(rng);
  return m;
}

void BM_SmithNormalForm(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  f1::IntMatrix m = random_matrix(n, 42 + n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(f1::smith_normal_form(m));
  }
}
BENCHMARK(BM_SmithNormalForm)->Arg(4)->Arg(6)->Arg(10)->Arg(16);

void BM_Determinant(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  f1::IntMatrix m = random_matrix(n, 7 + n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(m.determinant());
  }
}
BENCHMARK(BM_Determinant)->Arg(6)->Arg(12);

}  // namespace
