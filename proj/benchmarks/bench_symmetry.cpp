#include <benchmark/benchmark.h>

#include "chdig/families.hpp"
#include "chdig/symmetry.hpp"

using namespace chdig;

static void BM_AutomorphismGroupCycleK3(benchmark::State& state) {
  Digraph d = lex_product(families::directed_cycle(static_cast<int>(state.range(0))),
                          families::empty(3));
  for (auto _ : state) benchmark::DoNotOptimize(automorphism_group(d).order);
}
BENCHMARK(BM_AutomorphismGroupCycleK3)->Arg(4)->Arg(6)->Arg(8);

static void BM_AutomorphismGroupY(benchmark::State& state) {
  Digraph d = families::y(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(automorphism_group(d).order);
}
BENCHMARK(BM_AutomorphismGroupY)->Arg(3)->Arg(5);

static void BM_CanonicalFormH(benchmark::State& state) {
  Digraph d = families::h();
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(d));
}
BENCHMARK(BM_CanonicalFormH);

BENCHMARK_MAIN();
