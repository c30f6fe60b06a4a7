#pragma once

#include <string>
#include <vector>

#include "seqnet/graph.hpp"

namespace seqnet {

/// A formation path G(1)..G(T) starting from the empty graph G(0). Unweighted
/// paths add exactly one link per period; weighted paths add a symmetric,
/// entrywise non-negative increment of total mass 2 per period.
struct FormationPath {
  std::vector<Graph> graphs;
  bool weighted = false;

  int horizon() const { return static_cast<int>(graphs.size()); }
  int nodes() const { return graphs.empty() ? 0 : graphs.front().size(); }
  const Graph& at_period(int t) const { return graphs.at(static_cast<std::size_t>(t) - 1); }
};

/// Builds a path and verifies the succession constraint throughout.
FormationPath make_path(std::vector<Graph> graphs, bool weighted);

/// Throws invalid-path unless every period succeeds the previous one.
void validate_path(const FormationPath& path);

/// The single-pair edit between consecutive unweighted graphs.
LinkEdit edit_between(const Graph& before, const Graph& after);

/// T matrix blocks in the matrix text format, blank-line separated.
std::string to_path_text(const FormationPath& path);
FormationPath from_path_text(const std::string& text);

/// Per-period weights D(1)..D(T), each in [0,1].
struct DiscountSchedule {
  std::vector<double> weights;

  int horizon() const { return static_cast<int>(weights.size()); }
  double at_period(int t) const { return weights.at(static_cast<std::size_t>(t) - 1); }
  bool strictly_positive() const;
};

}  // namespace seqnet
