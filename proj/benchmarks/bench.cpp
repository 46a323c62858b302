#include <benchmark/benchmark.h>

#include "minorforge/generators.hpp"

namespace mf = minorforge;

static void bench_gnp_400(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(mf::gnp(400, 0.12, 7));
  }
}
BENCHMARK(bench_gnp_400);

BENCHMARK_MAIN();
