#include <benchmark/benchmark.h>

#include <random>

#include "seqnet/metrics.hpp"
#include "seqnet/planner.hpp"
#include "seqnet/reallocation.hpp"
#include "seqnet/structures.hpp"
#include "seqnet/weighted.hpp"

using namespace seqnet;

namespace {

Graph random_graph(int n, unsigned seed, double density = 0.4) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  Graph g = Graph::empty(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (unit(rng) < density) g = g.with_link(LinkEdit(i, j));
  return g;
}

void BM_CanonicalForm(benchmark::State& state) {
  const Graph g = random_graph(static_cast<int>(state.range(0)), 99);
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(g));
}

void BM_KatzBonacich(benchmark::State& state) {
  const Graph g = quasi_complete(static_cast<int>(state.range(0)),
                                 static_cast<int>(state.range(0)) * 2);
  for (auto _ : state) benchmark::DoNotOptimize(aggregate_kb_squared(g, 0.01));
}

void BM_SpectralRadius(benchmark::State& state) {
  const Graph g = random_graph(static_cast<int>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(spectral_radius(g));
}

void BM_GreedyStep(benchmark::State& state) {
  const Graph g = quasi_complete(7, 6);
  const UtilitySpec u = UtilitySpec::kb_squared(0.01);
  for (auto _ : state) {
    double best = 0.0;
    for (const Graph& succ : successors(g)) best = std::max(best, evaluate_utility(succ, u));
    benchmark::DoNotOptimize(best);
  }
}

void BM_ExactSearch(benchmark::State& state) {
  const DiscountSchedule d = discount_geometric(0.9, 6);
  const UtilitySpec u = UtilitySpec::kb_squared(0.02);
  for (auto _ : state)
    benchmark::DoNotOptimize(optimal_path_dp(static_cast<int>(state.range(0)), 6, d, u).value);
}

void BM_RepairPath(benchmark::State& state) {
  std::mt19937 rng(42);
  std::vector<FormationPath> inputs;
  for (int k = 0; k < 32; ++k) {
    FormationPath path;
    Graph g = Graph::empty(6);
    for (int t = 0; t < 8; ++t) {
      std::vector<std::pair<int, int>> open;
      for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j)
          if (!g.linked(i, j)) open.emplace_back(i, j);
      const auto [i, j] = open[rng() % open.size()];
      g = g.with_link(LinkEdit(i, j));
      path.graphs.push_back(g);
    }
    inputs.push_back(std::move(path));
  }
  std::size_t next = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(repair_path(inputs[next]));
    next = (next + 1) % inputs.size();
  }
}

void BM_BestWeightedStep(benchmark::State& state) {
  const Graph base = quasi_complete(7, 8);
  for (auto _ : state) benchmark::DoNotOptimize(best_weighted_step_kb2(base, 0.01, 8));
}

}  // namespace

BENCHMARK(BM_CanonicalForm)->Arg(7)->Arg(9);
BENCHMARK(BM_KatzBonacich)->Arg(7)->Arg(20);
BENCHMARK(BM_SpectralRadius)->Arg(10)->Arg(25);
BENCHMARK(BM_GreedyStep);
BENCHMARK(BM_ExactSearch)->Arg(5)->Arg(6);
BENCHMARK(BM_RepairPath);
BENCHMARK(BM_BestWeightedStep);

BENCHMARK_MAIN();
