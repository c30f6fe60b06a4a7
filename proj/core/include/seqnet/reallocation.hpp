#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "seqnet/metrics.hpp"
#include "seqnet/path.hpp"

namespace seqnet {

/// Record of a neighbour reallocation: every node in `moved` lost its link to
/// `source` and gained one to `target`.
struct ReallocationPlan {
  int target = 0;
  int source = 0;
  std::vector<int> moved;
};

/// Moves the full set L = {l : g_jl = 1, g_il = 0} of j's exclusive
/// neighbours over to i. L may be empty, in which case the graph is returned
/// unchanged. Moving a proper subset of L is deliberately not offered: it can
/// lower walk-monotone objectives.
std::pair<Graph, ReallocationPlan> reallocate_neighbors(const Graph& g, int i, int j);

/// Verdict of the reallocated graph against the original on walk counts of
/// length 2..k_max, optionally theta-weighted.
DominanceVerdict reallocate_dominates(const Graph& g, int i, int j,
                                      const std::optional<NodeWeights>& theta = std::nullopt,
                                      int k_max = 10);

struct RepairReport {
  FormationPath repaired;
  int passes = 0;
};

/// Suffix-rebuilding repair: finds the first period whose graph is not an
/// NSG, reroutes every later edit that touches the violating pair (the link
/// goes to the higher-degree node while it has the slot open), and iterates
/// until every period is an NSG. The result is feasible, the same length,
/// and walk-dominates the input period by period.
FormationPath repair_path(const FormationPath& path);
RepairReport repair_path_report(const FormationPath& path);

/// Weighted reallocation: for each k outside {i,j}, moves min(g_jk, 1-g_ik)
/// from (j,k) to (i,k), so afterwards g_ik = 1 or g_jk = 0. Total weight is
/// preserved.
Graph reallocate_weight(const Graph& g, int i, int j);

}  // namespace seqnet
