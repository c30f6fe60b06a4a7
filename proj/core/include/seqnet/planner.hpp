#pragma once

#include <optional>
#include <string>
#include <vector>

#include "seqnet/games.hpp"
#include "seqnet/metrics.hpp"
#include "seqnet/path.hpp"

namespace seqnet {

enum class UtilityKind {
  WalkWeighted,
  KbAggregate,
  KbSquared,
  Diffusion,
  SpectralRadius,
  EquilibriumWelfare,
};

/// Tagged instantaneous utility u(G). Every member of the family is strictly
/// increasing in the aggregate walk counts, which is what the planner results
/// rely on. The optional theta reweights walks by their endpoints and is
/// supported for the families that are linear in the terminal vector.
struct UtilitySpec {
  UtilityKind kind = UtilityKind::KbSquared;
  double phi = 0.01;
  int rounds = 0;                         // diffusion horizon L
  std::vector<double> walk_coeffs;        // WalkWeighted: coefficient of 1'G^k 1, k = 1..K
  std::optional<ResponseFunction> psi;    // EquilibriumWelfare
  WelfareTransform transform = WelfareTransform::Identity;
  std::optional<NodeWeights> theta;

  static UtilitySpec kb(double phi);
  static UtilitySpec kb_squared(double phi);
  static UtilitySpec diffusion(double phi, int rounds);
  static UtilitySpec spectral();
  static UtilitySpec walks(std::vector<double> coeffs);
  static UtilitySpec equilibrium_welfare(ResponseFunction psi, WelfareTransform transform);

  std::string label() const;
};

double evaluate_utility(const Graph& g, const UtilitySpec& u);

/// v(s) = sum_t D(t) u(G(t)).
double evaluate_path(const FormationPath& s, const DiscountSchedule& d, const UtilitySpec& u);

DiscountSchedule discount_farsighted(int horizon);
DiscountSchedule discount_geometric(double delta, int horizon);
DiscountSchedule discount_myopic(double epsilon, int horizon);

/// Adds at each period the successor with the highest utility; ties within
/// relative 1e-12 go to the lexicographically smallest canonical form.
FormationPath greedy_path(int n, int horizon, const UtilitySpec& u);

struct DpResult {
  FormationPath path;
  double value = 0.0;
  std::size_t states = 0;
};

/// Exact optimum of evaluate_path by dynamic programming over canonical
/// isomorphism classes per period. Sound because every utility here is
/// permutation-invariant and succession commutes with relabeling. Bounded to
/// n <= 7 unrestricted and n <= 9 when restricted to NSG states.
DpResult optimal_path_dp(int n, int horizon, const DiscountSchedule& d, const UtilitySpec& u,
                         bool restrict_to_nsg = false);

/// Every optimal sequence of isomorphism classes (class representatives per
/// period), for inspecting structural claims about all optimizers. Ties are
/// kept when values agree within relative 1e-12.
std::vector<std::vector<Graph>> enumerate_optimal_class_paths(int n, int horizon,
                                                              const DiscountSchedule& d,
                                                              const UtilitySpec& u,
                                                              bool restrict_to_nsg = false,
                                                              std::size_t path_cap = 100000);

struct AgentSequence {
  std::vector<int> agents;  // 0-based node per period

  int horizon() const { return static_cast<int>(agents.size()); }
};

/// The delegated agent links to the non-neighbour maximizing her own rooted
/// Katz-Bonacich centrality; ties go to the smallest index.
Graph delegated_step(const Graph& g, int agent, double phi_agent);

FormationPath delegated_path(int n, int horizon, const AgentSequence& agents, double phi_agent);

/// For each period of an NSG path, the endpoint of the incoming edit whose
/// neighbourhood is nested in the other's: delegating that agent reproduces
/// the planner's link.
AgentSequence delegation_recipe(const FormationPath& path);

}  // namespace seqnet
