#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "seqnet/path.hpp"
#include "seqnet/planner.hpp"

namespace seqnet {

/// One period of weighted succession: per-pair increments, entrywise
/// non-negative, summing to one unit across pairs, respecting capacity.
struct WeightEdit {
  std::vector<std::pair<LinkEdit, double>> increments;

  Graph apply(const Graph& g) const;
  double mass() const;
};

/// Discretized sample of the weighted succession set: every placement of one
/// unit of mass across at most two pairs at grid spacing 1/resolution,
/// clamped by pair capacity. A sample of the continuum, not all of it; the
/// two-pair splits are the ones the structural results turn on.
std::vector<Graph> weighted_successors_grid(const Graph& g, int resolution);

/// The family G[alpha] over a quasi-complete base with two NSG successor
/// classes: alpha goes on the clique-extension pair, 1-alpha on the
/// new-spoke pair. G[1] is the QC successor, G[0] the other unweighted NSG.
Graph alpha_family(const Graph& base, double alpha);

/// Maximizes the aggregate squared Katz-Bonacich centrality over the grid,
/// then refines inside the alpha family by golden-section search (tolerance
/// 1e-10 in alpha) with a dense sweep guarding the unimodality assumption.
Graph best_weighted_step_kb2(const Graph& g, double phi, int resolution);

struct PathPerturbation {
  FormationPath plus;
  FormationPath minus;
};

/// Splits a strictly weighted path into two feasible neighbours averaging
/// back to it, following the max/min-clamped two-pair construction. Returns
/// nothing when the path is unweighted throughout: such paths are extreme
/// points and admit no perturbation.
std::optional<PathPerturbation> perturb_weighted_path(const FormationPath& path,
                                                      double delta = 1e-3);

/// Exact optimum of evaluate_path over grid-restricted weighted paths, by
/// dynamic programming over weighted isomorphism classes. Desk scale only
/// (n <= 6, horizon <= 5, resolution <= 8).
double best_grid_path_value(int n, int horizon, const DiscountSchedule& d, const UtilitySpec& u,
                            int resolution);

}  // namespace seqnet
