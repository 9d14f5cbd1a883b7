#include <benchmark/benchmark.h>

#include "tb/corpus.hpp"
#include "tb/decomposition.hpp"
#include "tb/polytope.hpp"

namespace {

tb::Execution mode(const benchmark::State& state) {
  return state.range(0) == 0 ? tb::Execution::serial : tb::Execution::parallel;
}

void set_label(benchmark::State& state) {
  state.SetLabel(state.range(0) == 0 ? "serial" : "parallel");
}

void BM_CorpusExhaustive(benchmark::State& state) {
  tb::CorpusOptions opts;
  opts.max_n = 5;
  opts.exec = mode(state);
  for (auto _ : state) benchmark::DoNotOptimize(tb::corpus_run(opts));
  set_label(state);
}
BENCHMARK(BM_CorpusExhaustive)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_CorpusRandom(benchmark::State& state) {
  tb::CorpusOptions opts;
  opts.max_n = 8;
  opts.random = tb::RandomMode{2000, 1};
  opts.exec = mode(state);
  for (auto _ : state) benchmark::DoNotOptimize(tb::corpus_run(opts));
  set_label(state);
}
BENCHMARK(BM_CorpusRandom)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_LatticePoints(benchmark::State& state) {
  const tb::HalfSpaceSystem h = tb::halfspace_system(tb::cone_graph(tb::gen::cycle(9)));
  for (auto _ : state) benchmark::DoNotOptimize(tb::lattice_points(h, 6, false, mode(state)));
  set_label(state);
}
BENCHMARK(BM_LatticePoints)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_ComputeQ0(benchmark::State& state) {
  const tb::Graph g = tb::gen::paper_example();
  for (auto _ : state) benchmark::DoNotOptimize(tb::compute_q0(g, mode(state)));
  set_label(state);
}
BENCHMARK(BM_ComputeQ0)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_GallaiEdmonds(benchmark::State& state) {
  const tb::Graph g = tb::gen::random(200, 0.03, 9);
  for (auto _ : state) benchmark::DoNotOptimize(tb::gallai_edmonds(g, mode(state)));
  set_label(state);
}
BENCHMARK(BM_GallaiEdmonds)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
