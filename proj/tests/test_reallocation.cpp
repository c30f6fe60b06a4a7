#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "oracles.hpp"
#include "seqnet/reallocation.hpp"
#include "seqnet/structures.hpp"

using namespace seqnet;

namespace {

// j's exclusive neighbours relative to i.
std::vector<int> exclusive_set(const Graph& g, int i, int j) {
  std::vector<int> out;
  for (int l = 0; l < g.size(); ++l) {
    if (l == i || l == j) continue;
    if (g.linked(j, l) && !g.linked(i, l)) out.push_back(l);
  }
  return out;
}

bool reduced_subset(const Graph& g, int a, int b) {
  for (int k = 0; k < g.size(); ++k) {
    if (k == a || k == b) continue;
    if (g.linked(a, k) && !g.linked(b, k)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("neighbour reallocation on small fixtures") {
  // Path: moving the far endpoint just relabels the graph.
  const Graph path3 = Graph::from_links(3, {{0, 1}, {1, 2}});
  const auto [star0, plan] = reallocate_neighbors(path3, 0, 1);
  CHECK(plan.moved == std::vector<int>{2});
  CHECK(isomorphic(star0, path3));
  for (int k = 2; k <= 8; ++k) CHECK(walk_count(star0, k) == walk_count(path3, k));

  // Opposite corners of a 4-cycle share their neighbourhoods: nothing moves.
  const Graph cycle4 = Graph::from_links(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  const auto [unchanged, empty_plan] = reallocate_neighbors(cycle4, 0, 2);
  CHECK(empty_plan.moved.empty());
  CHECK(graphs_equal(unchanged, cycle4, 0.0));

  // Two cherries; absorbing one strictly raises every short walk count.
  const Graph cherries = Graph::from_links(6, {{0, 1}, {0, 2}, {3, 4}, {3, 5}});
  const auto [merged, cherry_plan] = reallocate_neighbors(cherries, 0, 3);
  CHECK(cherry_plan.moved == std::vector<int>{4, 5});
  CHECK(merged.link_count() == cherries.link_count());
  CHECK(walk_count(merged, 2) == 20.0);   // degree squares 16+1+1+1+1
  CHECK(walk_count(cherries, 2) == 12.0);
  for (int k = 2; k <= 8; ++k) {
    CHECK(walk_count(merged, k) == static_cast<double>(oracle::enumerate_walks(merged, k)));
    CHECK(walk_count(merged, k) > walk_count(cherries, k));
  }
}

TEST_CASE("the two reallocation directions are relabelings of each other") {
  std::mt19937 rng(57);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = oracle::graph_from_mask(6, rng());
    const int i = static_cast<int>(rng() % 6);
    int j = static_cast<int>(rng() % 6);
    if (j == i) j = (j + 1) % 6;
    CHECK(isomorphic(reallocate_neighbors(g, i, j).first, reallocate_neighbors(g, j, i).first));
  }
}

TEST_CASE("reallocation preserves link count and outside degrees") {
  std::mt19937 rng(59);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = oracle::graph_from_mask(6, rng());
    const int i = static_cast<int>(rng() % 6);
    int j = static_cast<int>(rng() % 6);
    if (j == i) j = (j + 1) % 6;
    const Graph moved = reallocate_neighbors(g, i, j).first;
    CHECK(moved.link_count() == g.link_count());
    std::multiset<int> before, after;
    for (int v = 0; v < 6; ++v) {
      if (v == i || v == j) continue;
      before.insert(g.degree(v));
      after.insert(moved.degree(v));
    }
    CHECK(before == after);
  }
}

TEST_CASE("reallocation dominance, exhaustive at n=5") {
  for (const Graph& g : oracle::all_labeled_graphs(5)) {
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j) {
        if (i == j) continue;
        const std::vector<int> moved = exclusive_set(g, i, j);
        const DominanceVerdict verdict = reallocate_dominates(g, i, j, std::nullopt, 10);
        if (moved.empty()) {
          CHECK(verdict.verdict == Dominance::Equal);
        } else if (reduced_subset(g, i, j)) {
          // i's neighbourhood sits inside j's: the move is a relabeling.
          CHECK(verdict.verdict == Dominance::Equal);
        } else {
          CHECK(verdict.verdict == Dominance::StrictlyDominates);
        }
      }
  }
}

TEST_CASE("heterogeneous reallocation dominance") {
  // Base graphs with j's neighbourhood strictly inside i's; the original
  // path hands L to j, the reallocation hands it back to i.
  std::mt19937 rng(61);
  std::uniform_real_distribution<double> unit(0.1, 2.0);
  int exercised = 0;
  for (const Graph& base : oracle::all_labeled_graphs(4)) {
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        if (i == j || !reduced_subset(base, j, i)) continue;
        if (exclusive_set(base, j, i).empty()) continue;  // need proper inclusion
        std::vector<int> candidates;
        for (int l = 0; l < 4; ++l)
          if (l != i && l != j && !base.linked(i, l) && !base.linked(j, l)) candidates.push_back(l);
        if (candidates.empty()) continue;
        Graph original = base;
        for (int l : candidates) original = original.with_link(LinkEdit(j, l));
        std::vector<double> theta(4);
        for (double& v : theta) v = unit(rng);
        theta[i] = std::max(theta[i], theta[j] + 0.1);
        const DominanceVerdict verdict =
            reallocate_dominates(original, i, j, NodeWeights(theta), 10);
        CHECK(verdict.verdict == Dominance::StrictlyDominates);
        ++exercised;
      }
  }
  CHECK(exercised > 50);
}

TEST_CASE("repair leaves compliant paths alone") {
  FormationPath nsg_path;
  Graph g = Graph::empty(5);
  for (const auto& [i, j] : std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 2}, {0, 3}}) {
    g = g.with_link(LinkEdit(i, j));
    nsg_path.graphs.push_back(g);
  }
  const RepairReport report = repair_path_report(nsg_path);
  CHECK(report.passes == 0);
  for (std::size_t t = 0; t < nsg_path.graphs.size(); ++t)
    CHECK(graphs_equal(report.repaired.graphs[t], nsg_path.graphs[t], 0.0));
}

TEST_CASE("repair walkthrough with a second pass") {
  // Star prefix, a stray cherry at period 4, an unrelated edit, then a link
  // into the hub: the rebuild reroutes twice before settling.
  FormationPath path;
  Graph g = Graph::empty(6);
  for (const auto& [i, j] : std::vector<std::pair<int, int>>{
           {0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}, {2, 3}, {0, 4}}) {
    g = g.with_link(LinkEdit(i, j));
    path.graphs.push_back(g);
  }
  CHECK_FALSE(is_nsg(path.graphs[3]).ok());

  const RepairReport report = repair_path_report(path);
  CHECK(report.passes >= 1);
  CHECK(report.passes <= path.horizon());
  for (int t = 1; t <= report.repaired.horizon(); ++t) {
    CHECK(static_cast<bool>(is_nsg(report.repaired.at_period(t))));
    const DominanceVerdict v =
        compare_walk_profiles(report.repaired.at_period(t), path.at_period(t), 2, 12, std::nullopt);
    CHECK((v.verdict == Dominance::StrictlyDominates || v.verdict == Dominance::Equal));
  }
  // Strict somewhere: the input had a non-NSG period.
  bool strict = false;
  for (int t = 1; t <= report.repaired.horizon(); ++t)
    if (walk_count(report.repaired.at_period(t), 2) > walk_count(path.at_period(t), 2))
      strict = true;
  CHECK(strict);
}

TEST_CASE("repair on random paths") {
  std::mt19937 rng(67);
  for (int trial = 0; trial < 60; ++trial) {
    const FormationPath path = oracle::random_path(6, 8, rng);
    const RepairReport report = repair_path_report(path);
    CHECK(report.passes <= path.horizon());
    validate_path(report.repaired);
    for (int t = 1; t <= report.repaired.horizon(); ++t) {
      CHECK(static_cast<bool>(is_nsg(report.repaired.at_period(t))));
      for (int k = 2; k <= 10; ++k)
        CHECK(walk_count(report.repaired.at_period(t), k) >= walk_count(path.at_period(t), k));
    }
  }
}

TEST_CASE("weight reallocation") {
  // Saturating move: min rule arithmetic.
  Graph g = Graph::empty(3).with_pair_weight(0, 2, 0.7).with_pair_weight(1, 2, 0.6);
  const Graph moved = reallocate_weight(g, 0, 1);
  CHECK(moved.weight(0, 2) == doctest::Approx(1.0));
  CHECK(moved.weight(1, 2) == doctest::Approx(0.3));
  CHECK(moved.total_weight() == doctest::Approx(g.total_weight()));

  // Unweighted graphs reduce to the neighbour reallocation.
  std::mt19937 rng(71);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph h = oracle::graph_from_mask(6, rng());
    const int i = static_cast<int>(rng() % 6);
    int j = static_cast<int>(rng() % 6);
    if (i == j) j = (j + 1) % 6;
    CHECK(graphs_equal(reallocate_weight(h, i, j), reallocate_neighbors(h, i, j).first, 0.0));
  }

  // After acting on (a, b), no node keeps interior weight toward both.
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph h = oracle::random_weighted_graph(5, rng, 0.8);
    const int a = static_cast<int>(rng() % 5);
    int b = static_cast<int>(rng() % 5);
    if (a == b) b = (b + 1) % 5;
    const Graph after = reallocate_weight(h, a, b);
    for (int v = 0; v < 5; ++v) {
      if (v == a || v == b) continue;
      const bool va_interior = after.weight(v, a) > 1e-9 && after.weight(v, a) < 1.0 - 1e-9;
      const bool vb_positive = after.weight(v, b) > 1e-9;
      CHECK_FALSE((va_interior && vb_positive));
    }
  }
}
