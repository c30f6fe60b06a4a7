#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "seqnet/graph.hpp"

namespace seqnet {

/// Witness for (weighted) nestedness: either a node ordering along which
/// neighborhoods form an inclusion chain, or the first pair breaking it.
struct NsgCertificate {
  std::optional<std::vector<int>> ordering;
  std::optional<std::pair<int, int>> violating_pair;

  bool ok() const { return ordering.has_value(); }
  explicit operator bool() const { return ok(); }
};

/// Neighborhood nestedness check (N_i \ {j} vs N_j \ {i}) over all pairs.
/// The witness order lists nodes by descending degree, ties by index; the
/// violating pair is the lexicographically first one.
NsgCertificate is_nsg(const Graph& g);

/// Weighted variant: rows must dominate componentwise outside the mutual
/// entries, up to tolerance 1e-12.
NsgCertificate is_weighted_nsg(const Graph& g);

/// Decomposition of a quasi-complete graph: a clique on `clique_nodes`
/// (spoke-linked members listed first) plus `overflow` links from the spoke.
struct QcDecomposition {
  int clique_size = 0;
  int overflow = 0;
  std::vector<int> clique_nodes;
  std::optional<int> spoke_node;
};

/// Clique on nodes 1..p plus a spoke holding the overflow links, where p is
/// the largest clique a budget of t links affords.
Graph quasi_complete(int n, int t);

/// Present iff the graph is quasi-complete; works at any n via the structural
/// decomposition (equivalent to isomorphism against the constructor).
std::optional<QcDecomposition> is_quasi_complete(const Graph& g);

/// Star from node 1 plus overflow links filled from node 2 onward (the dual
/// construction to quasi_complete).
Graph quasi_star(int n, int t);

/// One representative per isomorphism class of nested split graphs with t
/// links, generated from threshold-graph creation sequences. n <= 10.
std::vector<Graph> enumerate_nsg(int n, int t);

/// The successors of an NSG that are themselves NSGs, one per isomorphism
/// class, sorted by canonical form.
std::vector<Graph> nsg_successors(const Graph& g);

}  // namespace seqnet
