#pragma once

// Test-side oracles. Every routine here recomputes a quantity along a route
// independent of the library path it is used to check: explicit walk
// enumeration instead of matrix-vector products, series summation instead of
// the linear solve, permutation search instead of canonical keys, threshold
// peeling instead of the pairwise nestedness scan.

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "seqnet/graph.hpp"
#include "seqnet/path.hpp"

namespace oracle {

using seqnet::Graph;

// Counts walks of length k by enumerating node sequences.
inline long long enumerate_walks(const Graph& g, int k) {
  const int n = g.size();
  long long total = 0;
  std::vector<int> walk;
  auto extend = [&](auto&& self, int node, int remaining) -> void {
    if (remaining == 0) {
      ++total;
      return;
    }
    for (int next = 0; next < n; ++next)
      if (g.linked(node, next)) self(self, next, remaining - 1);
  };
  for (int start = 0; start < n; ++start) extend(extend, start, k);
  return total;
}

// Aggregate Katz-Bonacich centrality as the decayed walk series.
inline double kb_series(const Graph& g, double phi, double cut = 1e-16) {
  const int n = g.size();
  std::vector<double> v(n, 1.0);
  double total = n;
  double scale = 1.0;
  for (int k = 1; k < 10000; ++k) {
    std::vector<double> next(n, 0.0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) next[i] += g.weight(i, j) * v[j];
    v = std::move(next);
    scale *= phi;
    double count = 0.0;
    for (double x : v) count += x;
    const double term = scale * count;
    total += term;
    if (term < cut) break;
  }
  return total;
}

// Aggregate squared Katz-Bonacich centrality as sum_k (k+1) phi^k 1'G^k 1.
inline double kb2_series(const Graph& g, double phi, double cut = 1e-16) {
  const int n = g.size();
  std::vector<double> v(n, 1.0);
  double total = n;
  double scale = 1.0;
  for (int k = 1; k < 10000; ++k) {
    std::vector<double> next(n, 0.0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) next[i] += g.weight(i, j) * v[j];
    v = std::move(next);
    scale *= phi;
    double count = 0.0;
    for (double x : v) count += x;
    const double term = (k + 1) * scale * count;
    total += term;
    if (term < cut) break;
  }
  return total;
}

inline Graph graph_from_mask(int n, unsigned mask) {
  Graph g = Graph::empty(n);
  int bit = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++bit)
      if (mask & (1u << bit)) g = g.with_link(seqnet::LinkEdit(i, j));
  return g;
}

inline std::vector<Graph> all_labeled_graphs(int n) {
  const int pairs = n * (n - 1) / 2;
  std::vector<Graph> out;
  out.reserve(1u << pairs);
  for (unsigned mask = 0; mask < (1u << pairs); ++mask) out.push_back(graph_from_mask(n, mask));
  return out;
}

// Isomorphism by trying all n! relabelings.
inline bool isomorphic_brute(const Graph& a, const Graph& b) {
  if (a.size() != b.size()) return false;
  const int n = a.size();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool match = true;
    for (int i = 0; i < n && match; ++i)
      for (int j = i + 1; j < n && match; ++j)
        if (a.linked(i, j) != b.linked(perm[i], perm[j])) match = false;
    if (match) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// One representative per isomorphism class, deduplicated by brute-force
// isomorphism for small n.
inline std::vector<Graph> all_graph_classes_brute(int n) {
  std::vector<Graph> reps;
  for (const Graph& g : all_labeled_graphs(n)) {
    bool seen = false;
    for (const Graph& rep : reps)
      if (isomorphic_brute(rep, g)) {
        seen = true;
        break;
      }
    if (!seen) reps.push_back(g);
  }
  return reps;
}

// Threshold-graph peeling: repeatedly remove an isolated or dominating node.
// Succeeds exactly on nested split graphs.
inline bool nsg_by_peeling(const Graph& g) {
  const int n = g.size();
  std::vector<bool> alive(n, true);
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) adj[i][j] = g.linked(i, j);
  int remaining = n;
  while (remaining > 1) {
    int pick = -1;
    for (int v = 0; v < n && pick < 0; ++v) {
      if (!alive[v]) continue;
      int deg = 0;
      for (int u = 0; u < n; ++u)
        if (alive[u] && u != v && adj[v][u]) ++deg;
      if (deg == 0 || deg == remaining - 1) pick = v;
    }
    if (pick < 0) return false;
    alive[pick] = false;
    --remaining;
  }
  return true;
}

inline Graph permuted(const Graph& g, const std::vector<int>& perm) {
  Graph out = Graph::empty(g.size());
  for (int i = 0; i < g.size(); ++i)
    for (int j = i + 1; j < g.size(); ++j)
      if (g.weight(i, j) != 0.0) out = out.with_pair_weight(perm[i], perm[j], g.weight(i, j));
  return out;
}

inline seqnet::FormationPath random_path(int n, int horizon, std::mt19937& rng) {
  seqnet::FormationPath path;
  Graph current = Graph::empty(n);
  for (int t = 0; t < horizon; ++t) {
    std::vector<std::pair<int, int>> open;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (!current.linked(i, j)) open.emplace_back(i, j);
    std::uniform_int_distribution<std::size_t> pick(0, open.size() - 1);
    const auto [i, j] = open[pick(rng)];
    current = current.with_link(seqnet::LinkEdit(i, j));
    path.graphs.push_back(current);
  }
  return path;
}

inline Graph random_weighted_graph(int n, std::mt19937& rng, double density = 0.6) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  Graph g = Graph::empty(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (unit(rng) < density) g = g.with_pair_weight(i, j, unit(rng));
  return g;
}

}  // namespace oracle
