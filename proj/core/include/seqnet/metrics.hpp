#pragma once

#include <optional>
#include <string>
#include <vector>

#include "seqnet/graph.hpp"

namespace seqnet {

/// Per-node non-negative weights for heterogeneous walk counting.
struct NodeWeights {
  std::vector<double> theta;

  explicit NodeWeights(std::vector<double> values);
  static NodeWeights ones(int n);
  int size() const { return static_cast<int>(theta.size()); }
};

/// Total walk counts 1'G^k 1 for k = 0..k_max. counts[0] == n and counts[1]
/// is twice the total link weight; for unweighted graphs every entry is an
/// integer.
struct WalkProfile {
  std::vector<double> counts;

  int k_max() const { return static_cast<int>(counts.size()) - 1; }
};

/// 1'G^k 1, computed by k matrix-vector products.
double walk_count(const Graph& g, int k);

/// 1'G^k theta.
double walk_count_weighted(const Graph& g, int k, const NodeWeights& theta);

WalkProfile walk_profile(const Graph& g, int k_max);
WalkProfile walk_profile_weighted(const Graph& g, int k_max, const NodeWeights& theta);

std::string walk_profile_csv(const WalkProfile& profile);

enum class CentralityKind { KatzBonacich, Diffusion };

struct CentralityVector {
  std::vector<double> values;
  double decay = 0.0;
  int rounds = 0;  // diffusion iteration count L; unused for Katz-Bonacich
  CentralityKind kind = CentralityKind::KatzBonacich;

  double aggregate() const;
  double aggregate_squared() const;
};

std::string centrality_csv(const CentralityVector& c);

/// Solves (I - phi*G) b = 1 directly (LU). Requires 0 <= phi < 1/lambda_max.
CentralityVector katz_bonacich(const Graph& g, double phi);

/// Sum of Katz-Bonacich centralities.
double aggregate_kb(const Graph& g, double phi);

/// Sum of squared Katz-Bonacich centralities.
double aggregate_kb_squared(const Graph& g, double phi);

/// d_i = sum_{k<=rounds} phi^k (G^k 1)_i, phi in [0,1].
CentralityVector diffusion_centrality(const Graph& g, double phi, int rounds);

double aggregate_diffusion(const Graph& g, double phi, int rounds);

/// Largest eigenvalue, by power iteration on G + c*I with c = max strength so
/// the dominant eigenvalue is well separated on bipartite graphs. Empty
/// graphs return 0.
double spectral_radius(const Graph& g);

/// Variants used by the katz_bonacich/theta overloads: solve against an
/// arbitrary right-hand side.
std::vector<double> kb_solve(const Graph& g, double phi, const std::vector<double>& rhs);

enum class Dominance { StrictlyDominates, DominatedStrictly, Equal, Incomparable };

const char* to_string(Dominance d);

/// Outcome of comparing two walk profiles over a truncated range of lengths.
/// Long-walk ordering is governed by the spectral radius; the truncation
/// cannot certify limit statements, so the verdict reports how far it looked.
struct DominanceVerdict {
  Dominance verdict = Dominance::Equal;
  int k_checked = 0;
};

/// Compares 1'G^k 1 against 1'H^k 1 for k = 0..k_max (default 2n when
/// k_max < 0). StrictlyDominates means >= everywhere and > somewhere.
DominanceVerdict walk_dominates(const Graph& g, const Graph& h, int k_max = -1);

/// Shared comparator over [k_from, k_max] with optional per-node weights.
DominanceVerdict compare_walk_profiles(const Graph& g, const Graph& h, int k_from, int k_max,
                                       const std::optional<NodeWeights>& theta);

}  // namespace seqnet
