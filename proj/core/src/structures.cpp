#include "seqnet/structures.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

namespace seqnet {

namespace {

constexpr double kWeightTol = 1e-12;

// N_i \ {j} subseteq N_j \ {i}?
bool reduced_neighborhood_subset(const Graph& g, int i, int j) {
  for (int k = 0; k < g.size(); ++k) {
    if (k == i || k == j) continue;
    if (g.linked(i, k) && !g.linked(j, k)) return false;
  }
  return true;
}

bool row_dominates(const Graph& g, int i, int j) {
  for (int k = 0; k < g.size(); ++k) {
    if (k == i || k == j) continue;
    if (g.weight(i, k) < g.weight(j, k) - kWeightTol) return false;
  }
  return true;
}

std::vector<int> degree_order(const Graph& g) {
  std::vector<int> order(g.size());
  std::iota(order.begin(), order.end(), 0);
  const std::vector<int> deg = g.degrees();
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return deg[a] > deg[b]; });
  return order;
}

}  // namespace

NsgCertificate is_nsg(const Graph& g) {
  require(g.unweighted(), ErrorCode::InvalidInput, "nestedness check requires an unweighted graph");
  NsgCertificate cert;
  for (int i = 0; i < g.size(); ++i)
    for (int j = i + 1; j < g.size(); ++j)
      if (!reduced_neighborhood_subset(g, i, j) && !reduced_neighborhood_subset(g, j, i)) {
        cert.violating_pair = {i, j};
        return cert;
      }
  cert.ordering = degree_order(g);
  return cert;
}

NsgCertificate is_weighted_nsg(const Graph& g) {
  NsgCertificate cert;
  for (int i = 0; i < g.size(); ++i)
    for (int j = i + 1; j < g.size(); ++j)
      if (!row_dominates(g, i, j) && !row_dominates(g, j, i)) {
        cert.violating_pair = {i, j};
        return cert;
      }
  std::vector<int> order(g.size());
  std::iota(order.begin(), order.end(), 0);
  std::vector<double> strength(g.size());
  for (int i = 0; i < g.size(); ++i) strength[i] = g.strength(i);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return strength[a] > strength[b]; });
  cert.ordering = std::move(order);
  return cert;
}

namespace {

// Largest p with p(p-1)/2 <= t; then t sits in [p(p-1)/2, p(p+1)/2).
int clique_size_for(int t) {
  int p = 1;
  while ((p + 1) * p / 2 <= t) ++p;
  return p;
}

}  // namespace

Graph quasi_complete(int n, int t) {
  require(n >= 1, ErrorCode::InvalidSize, "graph needs at least one node");
  require(t >= 0 && t <= n * (n - 1) / 2, ErrorCode::InvalidBudget,
          "link budget outside [0, n(n-1)/2]");
  const int p = clique_size_for(t);
  const int overflow = t - p * (p - 1) / 2;
  Graph g = Graph::empty(n);
  for (int i = 0; i < p; ++i)
    for (int j = i + 1; j < p; ++j) g = g.with_link(LinkEdit(i, j));
  for (int k = 0; k < overflow; ++k) g = g.with_link(LinkEdit(p, k));
  return g;
}

std::optional<QcDecomposition> is_quasi_complete(const Graph& g) {
  require(g.unweighted(), ErrorCode::InvalidInput, "QC check requires an unweighted graph");
  const int t = g.link_count();
  const int p = clique_size_for(t);
  const int overflow = t - p * (p - 1) / 2;

  std::vector<int> active;
  for (int i = 0; i < g.size(); ++i)
    if (g.degree(i) > 0) active.push_back(i);

  auto is_clique = [&](const std::vector<int>& nodes) {
    for (std::size_t a = 0; a < nodes.size(); ++a)
      for (std::size_t b = a + 1; b < nodes.size(); ++b)
        if (!g.linked(nodes[a], nodes[b])) return false;
    return true;
  };

  QcDecomposition out;
  out.clique_size = p;
  out.overflow = overflow;

  if (overflow == 0) {
    if (t == 0) return g.size() >= 1 ? std::optional<QcDecomposition>(out) : std::nullopt;
    if (static_cast<int>(active.size()) != p || !is_clique(active)) return std::nullopt;
    out.clique_nodes = active;
    return out;
  }

  if (static_cast<int>(active.size()) != p + 1) return std::nullopt;
  // Try each degree-matching candidate as the spoke.
  for (int spoke : active) {
    if (g.degree(spoke) != overflow) continue;
    std::vector<int> clique;
    for (int v : active)
      if (v != spoke) clique.push_back(v);
    if (!is_clique(clique)) continue;
    bool spoke_ok = true;
    for (int v : g.neighbors(spoke))
      if (std::find(clique.begin(), clique.end(), v) == clique.end()) spoke_ok = false;
    if (!spoke_ok) continue;
    // Spoke-linked clique members first, each side sorted by index.
    std::vector<int> linked, unlinked;
    for (int v : clique) (g.linked(spoke, v) ? linked : unlinked).push_back(v);
    out.clique_nodes = linked;
    out.clique_nodes.insert(out.clique_nodes.end(), unlinked.begin(), unlinked.end());
    out.spoke_node = spoke;
    return out;
  }
  return std::nullopt;
}

Graph quasi_star(int n, int t) {
  require(n >= 1, ErrorCode::InvalidSize, "graph needs at least one node");
  require(t >= 0 && t <= n * (n - 1) / 2, ErrorCode::InvalidBudget,
          "link budget outside [0, n(n-1)/2]");
  Graph g = Graph::empty(n);
  int remaining = t;
  // Hub fills first; the next node takes the overflow, and so on.
  for (int hub = 0; hub < n && remaining > 0; ++hub)
    for (int leaf = hub + 1; leaf < n && remaining > 0; ++leaf) {
      g = g.with_link(LinkEdit(hub, leaf));
      --remaining;
    }
  return g;
}

std::vector<Graph> enumerate_nsg(int n, int t) {
  require(n >= 1 && n <= 10, ErrorCode::SizeLimit, "NSG enumeration is limited to n <= 10");
  require(t >= 0 && t <= n * (n - 1) / 2, ErrorCode::InvalidBudget,
          "link budget outside [0, n(n-1)/2]");
  std::map<CanonicalForm, Graph> classes;
  // Creation sequences: after the first node, each bit adds the next node
  // isolated (0) or dominating (1).
  const unsigned sequences = 1u << (n - 1);
  for (unsigned code = 0; code < sequences; ++code) {
    int links = 0;
    for (int b = 0; b < n - 1; ++b)
      if (code & (1u << b)) links += b + 1;
    if (links != t) continue;
    Graph g = Graph::empty(n);
    for (int b = 0; b < n - 1; ++b)
      if (code & (1u << b))
        for (int prev = 0; prev <= b; ++prev) g = g.with_link(LinkEdit(b + 1, prev));
    classes.emplace(canonical_form(g), std::move(g));
  }
  std::vector<Graph> out;
  out.reserve(classes.size());
  for (auto& [key, g] : classes) out.push_back(std::move(g));
  return out;
}

std::vector<Graph> nsg_successors(const Graph& g) {
  require(static_cast<bool>(is_nsg(g)), ErrorCode::InvalidInput, "input graph is not an NSG");
  std::map<CanonicalForm, Graph> classes;
  for (Graph& succ : successors(g))
    if (is_nsg(succ)) classes.emplace(canonical_form(succ), std::move(succ));
  std::vector<Graph> out;
  out.reserve(classes.size());
  for (auto& [key, graph] : classes) out.push_back(std::move(graph));
  return out;
}

}  // namespace seqnet
