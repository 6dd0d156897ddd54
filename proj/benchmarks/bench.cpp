#include "kbracket/chords.hpp"
#include "kbracket/families.hpp"
#include "kbracket/graphs.hpp"

#include <benchmark/benchmark.h>

using namespace kbracket;

static void BM_BracketTorus(benchmark::State& state) {
  const Diagram d = pretzel({static_cast<int>(state.range(0))});
  for (auto _ : state) benchmark::DoNotOptimize(bracket(d, {30, 1}));
}
BENCHMARK(BM_BracketTorus)->DenseRange(8, 20, 4)->Unit(benchmark::kMillisecond);

static void BM_BracketWorkers(benchmark::State& state) {
  const Diagram d = l_family(2, 2, 2, 2);
  for (auto _ : state) benchmark::DoNotOptimize(bracket(d, {30, static_cast<int>(state.range(0))}));
}
BENCHMARK(BM_BracketWorkers)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

static void BM_ExtremeCoeffsLando(benchmark::State& state) {
  const Diagram d = d_rs(static_cast<int>(state.range(0)), static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(extreme_coeffs(d));
}
BENCHMARK(BM_ExtremeCoeffsLando)->DenseRange(1, 4);

static void BM_FReducedHexagonChain(benchmark::State& state) {
  const Graph g = family_G(static_cast<int>(state.range(0))).graph;
  for (auto _ : state) benchmark::DoNotOptimize(f_reduced(g));
}
BENCHMARK(BM_FReducedHexagonChain)->RangeMultiplier(2)->Range(2, 32);

static void BM_FNaiveFibonacci(benchmark::State& state) {
  const Graph g = family_F(static_cast<int>(state.range(0))).graph;
  for (auto _ : state) benchmark::DoNotOptimize(f_naive(g));
}
BENCHMARK(BM_FNaiveFibonacci)->DenseRange(1, 3);

static void BM_Realize(benchmark::State& state) {
  const Graph g = family_G(static_cast<int>(state.range(0))).graph;
  for (auto _ : state) benchmark::DoNotOptimize(realize_as_chord_diagram(g));
}
BENCHMARK(BM_Realize)->DenseRange(1, 4);
BENCHMARK_MAIN();
