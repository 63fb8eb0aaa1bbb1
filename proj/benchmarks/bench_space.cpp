#include <benchmark/benchmark.h>

#include "cutcx/cuts.hpp"

using namespace cutcx;

static void BM_Canonicalize(benchmark::State& state) {
  SpaceSpec cantor = SpaceSpec::cantor();
  std::vector<std::string> raw;
  for (int i = 0; i < state.range(0); ++i) {
    std::string s;
    for (int b = 0; b < 6; ++b) s += ((i * 37 + b * 11) % 3 == 0) ? '1' : '0';
    raw.push_back(s);
  }
  for (auto _ : state) benchmark::DoNotOptimize(canonicalize(cantor, raw));
}
BENCHMARK(BM_Canonicalize)->Arg(8)->Arg(32);

static void BM_CountCylinder(benchmark::State& state) {
  SpaceSpec spec = SpaceSpec::union_of(SpaceSpec::cantor(), SpaceSpec::convergent());
  for (auto _ : state) {
    for (const char* s : {"0", "01", "110", "1011", "00101"})
      benchmark::DoNotOptimize(count_cylinder(spec, s));
  }
}
BENCHMARK(BM_CountCylinder);

static void BM_EnumerateBounded(benchmark::State& state) {
  SpaceSpec cantor = SpaceSpec::cantor();
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_cuts_bounded(cantor, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_EnumerateBounded)->Arg(2)->Arg(3);

BENCHMARK_MAIN();
