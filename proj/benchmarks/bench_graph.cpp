#include <benchmark/benchmark.h>

#include "cutcx/automorphisms.hpp"
#include "cutcx/reconstruction.hpp"

using namespace cutcx;

static void BM_FiniteComplex(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(finite_complex(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_FiniteComplex)->Arg(6)->Arg(8);

static void BM_Diameter(benchmark::State& state) {
  FiniteComplex fc = finite_complex(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(fc.graph.diameter());
}
BENCHMARK(BM_Diameter)->Arg(7)->Arg(9);

static void BM_Automorphisms(benchmark::State& state) {
  FiniteComplex fc = finite_complex(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(graph_automorphisms(fc.graph));
}
BENCHMARK(BM_Automorphisms)->Arg(5)->Arg(6)->Arg(7);
