#include <benchmark/benchmark.h>

#include "hdq/lift.hpp"
#include "hdq/pipeline.hpp"
#include "hdq/torus2.hpp"
#include "hdq/torus3.hpp"

static void BM_Build(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hdq::build(n));
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << (2 * n)));
}
BENCHMARK(BM_Build)->Arg(2)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_Torus2(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hdq::hd_torus2(n));
}
BENCHMARK(BM_Torus2)->DenseRange(1, 4)->Unit(benchmark::kMicrosecond);

// Surgery builds all three classes; the walk emits X only.
static void BM_Torus3Surgery(benchmark::State& state) {
  const auto s = hdq::latin_merging_set(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(hdq::hd_torus3_surgery(s));
}
BENCHMARK(BM_Torus3Surgery)->DenseRange(1, 3)->Unit(benchmark::kMicrosecond);

static void BM_Torus3Walk(benchmark::State& state) {
  const auto s = hdq::latin_merging_set(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(hdq::hd_torus3_walk(s));
}
BENCHMARK(BM_Torus3Walk)->DenseRange(1, 3)->Unit(benchmark::kMicrosecond);

static void BM_LiftFamily(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto es = hdq::build(n).expand();
  const auto hs = hdq::hd_torus2(n).expand();
  for (auto _ : state) benchmark::DoNotOptimize(hdq::lift_family(es, hs));
}
BENCHMARK(BM_LiftFamily)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMicrosecond);
