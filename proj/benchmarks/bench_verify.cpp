#include <benchmark/benchmark.h>

#include "hdq/pipeline.hpp"
#include "hdq/verify.hpp"

static void BM_CheckHd(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int jobs = static_cast<int>(state.range(1));
  const auto sp = hdq::build(n);
  const auto family = sp.expand();
  for (auto _ : state) benchmark::DoNotOptimize(hdq::verify::check_hd(family, sp.cycle.kind, jobs));
  state.SetItemsProcessed(state.iterations() * n * (std::int64_t{1} << (2 * n)));
}
BENCHMARK(BM_CheckHd)->Args({6, 1})->Args({8, 1})->Args({8, 4})->Unit(benchmark::kMillisecond);

static void BM_Walk(benchmark::State& state) {
  const auto cycle = hdq::build(static_cast<int>(state.range(0))).cycle;
  for (auto _ : state) benchmark::DoNotOptimize(hdq::verify::walk(cycle));
}
BENCHMARK(BM_Walk)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);
