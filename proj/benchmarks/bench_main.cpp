#include <benchmark/benchmark.h>

#include "csf/engine.hpp"
#include "csf/frames.hpp"
#include "csf/scenario.hpp"
#include "csf/trace.hpp"

namespace {

using namespace csf;

void BM_CombineSalience(benchmark::State& state) {
  double f = 0.73, p = -0.2, a = 0.5;
  for (auto _ : state) {
    benchmark::DoNotOptimize(combine_salience(f, p, a));
    f = f * 0.9999 + 1e-7;
  }
}
BENCHMARK(BM_CombineSalience);

void BM_Interpret(benchmark::State& state) {
  auto scenario = builtin("library_dance");
  LongTermMemory ltm;
  ltm.frames = scenario.frames;
  ltm.resources = scenario.resources;
  std::set<FrameId> salient = {"host_frame", "place_sense"};

  std::vector<Percept> percepts;
  for (int i = 0; i < state.range(0); ++i) {
    Percept p;
    p.subject = "peer" + std::to_string(i);
    p.attributes = {{"location", Value(std::string("home"))},
                    {"peer", Value(true)},
                    {"person", Value(true)}};
    percepts.push_back(p);
  }

  for (auto _ : state) {
    auto context = interpret(percepts, salient, ltm);
    benchmark::DoNotOptimize(context);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Interpret)->Arg(4)->Arg(32)->Arg(256);

void BM_FullRun(benchmark::State& state) {
  auto scenario = builtin("library_dance");
  for (auto _ : state) {
    Simulation sim(scenario, 0);
    auto trace = sim.run(state.range(0));
    benchmark::DoNotOptimize(trace);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_FullRun)->Arg(10)->Arg(100);

void BM_ParseScenario(benchmark::State& state) {
  const auto& doc = builtin_document("library_dance");
  for (auto _ : state) {
    auto scenario = parse_scenario(doc);
    benchmark::DoNotOptimize(scenario);
  }
}
BENCHMARK(BM_ParseScenario);

void BM_TraceSerialize(benchmark::State& state) {
  auto trace = run(builtin("coach_father"), 20, 0);
  for (auto _ : state) {
    auto text = trace_text(trace);
    benchmark::DoNotOptimize(text);
  }
}
BENCHMARK(BM_TraceSerialize);

} // namespace

BENCHMARK_MAIN();
