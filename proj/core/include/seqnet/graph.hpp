#pragma once

#include <string>
#include <utility>
#include <vector>

#include "seqnet/error.hpp"

namespace seqnet {

/// A single-pair edit, the unit of change in the unweighted formation process.
struct LinkEdit {
  int i;
  int j;

  LinkEdit(int i_, int j_) : i(i_), j(j_) {
    require(i != j, ErrorCode::InvalidEdit, "link endpoints must be distinct");
    require(i >= 0 && j >= 0, ErrorCode::InvalidEdit, "negative node index");
  }
};

/// Dense symmetric graph with pairwise weights in [0,1] and a zero diagonal.
///
/// Graphs are immutable values: every edit returns a new graph, so paths can
/// hold per-period snapshots and memoization can key on graph identity.
/// Node indices are 0-based internally; all user-facing output is 1-based.
class Graph {
 public:
  static Graph empty(int n);
  static Graph from_links(int n, const std::vector<std::pair<int, int>>& links);
  /// Builds from a row-major n*n weight matrix. Entries are snapped to [0,1]
  /// within 1e-12 and must be symmetric with a zero diagonal.
  static Graph from_matrix(int n, const std::vector<double>& weights);

  int size() const { return n_; }
  double weight(int i, int j) const { return w_[static_cast<std::size_t>(i) * n_ + j]; }
  bool linked(int i, int j) const { return weight(i, j) > 0.0; }

  /// True when every entry is exactly 0 or 1.
  bool unweighted() const;
  /// Number of pairs i<j with nonzero weight.
  int link_count() const;
  /// Sum of pair weights over i<j.
  double total_weight() const;

  int degree(int i) const;
  /// Weighted degree (row sum).
  double strength(int i) const;
  std::vector<int> neighbors(int i) const;
  std::vector<int> degrees() const;

  Graph with_link(const LinkEdit& e) const;
  /// Returns a copy with the (i,j)/(j,i) entries set to w (w in [0,1]).
  Graph with_pair_weight(int i, int j, double w) const;

  const std::vector<double>& data() const { return w_; }

 private:
  Graph(int n, std::vector<double> w) : n_(n), w_(std::move(w)) {}

  int n_ = 0;
  std::vector<double> w_;
};

/// Entrywise comparison with tolerance; the default matches the weighted
/// equality tolerance used throughout.
bool graphs_equal(const Graph& a, const Graph& b, double tol = 1e-12);

/// G + E_ij. The pair must be open and the graph unweighted.
Graph add_link(const Graph& g, const LinkEdit& e);

/// All graphs succeeding g: one per open pair (i<j), in lexicographic pair
/// order. Empty for a complete graph.
std::vector<Graph> successors(const Graph& g);

/// Permutation-invariant key identifying the isomorphism class. Two graphs
/// have equal keys iff they are isomorphic (exact; guaranteed for n <= 10).
struct CanonicalForm {
  std::string key;

  friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) { return a.key == b.key; }
  friend bool operator!=(const CanonicalForm& a, const CanonicalForm& b) { return a.key != b.key; }
  friend bool operator<(const CanonicalForm& a, const CanonicalForm& b) { return a.key < b.key; }
};

/// Minimizes the packed adjacency bit-string over permutations refined by the
/// degree partition. Requires an unweighted graph with n <= 10.
CanonicalForm canonical_form(const Graph& g);

bool isomorphic(const Graph& a, const Graph& b);

/// Undirected DOT; the weight attribute is emitted only when != 1.
std::string to_dot(const Graph& g);
/// Parses the DOT subset produced by to_dot.
Graph from_dot(const std::string& text);

/// First line n, then n whitespace-separated rows. Round-trips bit-exact.
std::string to_matrix_text(const Graph& g);
Graph from_matrix_text(const std::string& text);

}  // namespace seqnet
