#include "butterfly/apollonian.hpp"
#include "butterfly/diophantine.hpp"
#include "butterfly/scaling.hpp"
#include "butterfly/skeleton.hpp"
#include "butterfly/tree.hpp"

#include <benchmark/benchmark.h>

using namespace butterfly;

static void BM_Expand(benchmark::State& state) {
  const ExpansionLimits limits{static_cast<std::size_t>(state.range(0)), std::nullopt, 6};
  std::size_t nodes = 0;
  for (auto _ : state) {
    nodes = 0;
    expand(limits, [&](const TreeNode&) { ++nodes; });
  }
  state.counters["nodes"] = static_cast<double>(nodes);
}
BENCHMARK(BM_Expand)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

static void BM_VerifySweep(benchmark::State& state) {
  const auto nodes = expand_all({4, std::nullopt, 6});
  for (auto _ : state)
    for (const auto& n : nodes) benchmark::DoNotOptimize(verify_node(n).passed());
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(nodes.size()));
}
BENCHMARK(BM_VerifySweep)->Unit(benchmark::kMillisecond);

static void BM_DeepAddress(benchmark::State& state) {
  const Word w(static_cast<std::size_t>(state.range(0)), GeneratorKind::UL);
  for (auto _ : state) benchmark::DoNotOptimize(node_at(w));
}
BENCHMARK(BM_DeepAddress)->RangeMultiplier(4)->Range(16, 1024);

static void BM_GapLabels(benchmark::State& state) {
  const std::int64_t q = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(gap_labels(q - 1, q));
}
BENCHMARK(BM_GapLabels)->RangeMultiplier(10)->Range(10, 10000);

static void BM_Orbit(benchmark::State& state) {
  const DescartesQuadruple seed{{-1, 2, 2, 3}};
  for (auto _ : state)
    benchmark::DoNotOptimize(for_each_in_orbit(seed, static_cast<std::size_t>(state.range(0)), true,
                                               [](const DescartesQuadruple&) {}));
}
BENCHMARK(BM_Orbit)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

static void BM_ContinuedFraction(benchmark::State& state) {
  const auto s = scaling_exponent(Word(8, GeneratorKind::UL));
  for (auto _ : state) benchmark::DoNotOptimize(cf_expansion(s, 64));
}
BENCHMARK(BM_ContinuedFraction);

static void BM_Render(benchmark::State& state) {
  const auto nodes = expand_all({static_cast<std::size_t>(state.range(0)), std::nullopt, 2});
  for (auto _ : state) benchmark::DoNotOptimize(render_svg(nodes));
}
BENCHMARK(BM_Render)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
