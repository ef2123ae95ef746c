#include <benchmark/benchmark.h>

#include "chdig/families.hpp"
#include "chdig/reachability.hpp"

using namespace chdig;

static void BM_ReachabilityClassesY(benchmark::State& state) {
  Digraph d = families::y(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(reachability_classes(d).classes.size());
}
BENCHMARK(BM_ReachabilityClassesY)->Arg(4)->Arg(6);

static void BM_DeltaShapeBall(benchmark::State& state) {
  Digraph d = families::t2_ball(static_cast<int>(state.range(0))).digraph;
  for (auto _ : state) benchmark::DoNotOptimize(delta_shape(d).shape.kind);
}
BENCHMARK(BM_DeltaShapeBall)->Arg(2)->Arg(4);
