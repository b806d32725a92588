#include <benchmark/benchmark.h>

#include <sstream>

#include "hdq/codec.hpp"
#include "hdq/pipeline.hpp"

namespace {

hdq::Artifact expanded(int n) {
  const auto sp = hdq::build(n);
  auto a = hdq::Artifact::from(sp.expand());
  a.matrix = sp.matrix;
  return a;
}

}  // namespace

static void BM_EncodeText(benchmark::State& state) {
  const auto a = expanded(static_cast<int>(state.range(0)));
  std::size_t bytes = 0;
  for (auto _ : state) {
    const auto text = hdq::encode_text(a);
    bytes = text.size();
    benchmark::DoNotOptimize(text.data());
  }
  state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations() * bytes));
}
BENCHMARK(BM_EncodeText)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_DecodeText(benchmark::State& state) {
  const auto text = hdq::encode_text(expanded(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(hdq::decode_text(text));
  state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations() * text.size()));
}
BENCHMARK(BM_DecodeText)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_StreamWriter(benchmark::State& state) {
  const auto sp = hdq::build(static_cast<int>(state.range(0)));
  const auto family = sp.expand();
  for (auto _ : state) {
    std::ostringstream os;
    hdq::StreamWriter w(os, sp.cycle.kind, family.size(), sp.cycle.steps.size());
    for (const auto& c : family) w.write_cycle(c.steps);
    w.finish();
    benchmark::DoNotOptimize(os.str().size());
  }
}
BENCHMARK(BM_StreamWriter)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);
