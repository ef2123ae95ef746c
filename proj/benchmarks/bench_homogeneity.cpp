#include <benchmark/benchmark.h>

#include "chdig/families.hpp"
#include "chdig/homogeneity.hpp"

using namespace chdig;

static void BM_CHomogeneousCycle(benchmark::State& state) {
  Digraph d = lex_product(families::directed_cycle(static_cast<int>(state.range(0))),
                          families::empty(2));
  for (auto _ : state) benchmark::DoNotOptimize(is_c_homogeneous(d).holds);
}
BENCHMARK(BM_CHomogeneousCycle)->Arg(4)->Arg(6);

static void BM_CHomogeneousY4(benchmark::State& state) {
  Digraph d = families::y(4);
  for (auto _ : state) benchmark::DoNotOptimize(is_c_homogeneous(d).holds);
}
BENCHMARK(BM_CHomogeneousY4);

static void BM_Oracle5(benchmark::State& state) {
  Digraph d = families::directed_cycle(5);
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_oracle(d, true).holds);
}
BENCHMARK(BM_Oracle5);
