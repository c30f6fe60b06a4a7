#include "seqnet/reallocation.hpp"

#include <algorithm>

#include "seqnet/structures.hpp"

namespace seqnet {

std::pair<Graph, ReallocationPlan> reallocate_neighbors(const Graph& g, int i, int j) {
  require(g.unweighted(), ErrorCode::InvalidInput, "neighbour reallocation needs an unweighted graph");
  require(i != j, ErrorCode::InvalidEdit, "nodes must be distinct");
  require(i >= 0 && i < g.size() && j >= 0 && j < g.size(), ErrorCode::InvalidEdit,
          "node index out of range");
  ReallocationPlan plan;
  plan.target = i;
  plan.source = j;
  Graph out = g;
  for (int l = 0; l < g.size(); ++l) {
    if (l == i || l == j) continue;
    if (g.linked(j, l) && !g.linked(i, l)) {
      plan.moved.push_back(l);
      out = out.with_pair_weight(j, l, 0.0).with_pair_weight(i, l, 1.0);
    }
  }
  return {out, plan};
}

DominanceVerdict reallocate_dominates(const Graph& g, int i, int j,
                                      const std::optional<NodeWeights>& theta, int k_max) {
  const Graph reallocated = reallocate_neighbors(g, i, j).first;
  return compare_walk_profiles(reallocated, g, 2, k_max, theta);
}

namespace {

int first_non_nsg(const std::vector<Graph>& graphs) {
  for (std::size_t t = 0; t < graphs.size(); ++t)
    if (!is_nsg(graphs[t])) return static_cast<int>(t);
  return -1;
}

// Orders the violating pair (i, j) at the first non-nested period. The
// nestedness of a pair can only break when an edit touches one of its
// members, and that member's neighbourhood sat inside the other's just
// before the edit, so the edit endpoint is j (the donor-to-be) and the
// other member is i. Degrees alone cannot decide this: when they tie, the
// two orientations rebuild against different histories and only this one
// keeps the rebuilt suffix dominant.
std::pair<int, int> ordered_violating_pair(const Graph& g, const LinkEdit& incoming) {
  const NsgCertificate cert = is_nsg(g);
  const auto [a, b] = cert.violating_pair.value();
  const bool a_touched = a == incoming.i || a == incoming.j;
  const bool b_touched = b == incoming.i || b == incoming.j;
  require(a_touched != b_touched, ErrorCode::InvariantViolation,
          "violating pair is not anchored to the incoming edit");
  return a_touched ? std::make_pair(b, a) : std::make_pair(a, b);
}

std::vector<Graph> rebuild_suffix(const std::vector<Graph>& s, int t0, int i, int j) {
  const int n = s.front().size();
  std::vector<Graph> out(s.begin(), s.begin() + t0);
  Graph current = t0 == 0 ? Graph::empty(n) : s[static_cast<std::size_t>(t0) - 1];
  for (std::size_t t = static_cast<std::size_t>(t0); t < s.size(); ++t) {
    const Graph& before = t == 0 ? Graph::empty(n) : s[t - 1];
    const LinkEdit original = edit_between(before, s[t]);
    LinkEdit applied = original;
    const bool touches_i = original.i == i || original.j == i;
    const bool touches_j = original.i == j || original.j == j;
    if (touches_i != touches_j) {
      const int l = (original.i == i || original.i == j) ? original.j : original.i;
      applied = current.linked(i, l) ? LinkEdit(j, l) : LinkEdit(i, l);
    }
    require(!current.linked(applied.i, applied.j), ErrorCode::InvariantViolation,
            "suffix rebuild produced an infeasible edit");
    current = current.with_link(applied);
    out.push_back(current);
  }
  return out;
}

void check_pass_dominance(const std::vector<Graph>& rebuilt, const std::vector<Graph>& original) {
  const int k_max = 2 * original.front().size();
  for (std::size_t t = 0; t < original.size(); ++t) {
    const DominanceVerdict v = compare_walk_profiles(rebuilt[t], original[t], 2, k_max, std::nullopt);
    require(v.verdict == Dominance::StrictlyDominates || v.verdict == Dominance::Equal,
            ErrorCode::InvariantViolation, "rebuilt path fails to dominate the input");
  }
}

}  // namespace

RepairReport repair_path_report(const FormationPath& path) {
  require(!path.weighted, ErrorCode::InvalidPath, "repair handles unweighted paths");
  validate_path(path);
  std::vector<Graph> current = path.graphs;
  int passes = 0;
  while (true) {
    const int t0 = first_non_nsg(current);
    if (t0 < 0) break;
    require(passes < path.horizon(), ErrorCode::InvariantViolation,
            "repair did not settle within T passes");
    const Graph& before =
        t0 == 0 ? Graph::empty(path.nodes()) : current[static_cast<std::size_t>(t0) - 1];
    const LinkEdit incoming = edit_between(before, current[static_cast<std::size_t>(t0)]);
    const auto [i, j] = ordered_violating_pair(current[static_cast<std::size_t>(t0)], incoming);
    std::vector<Graph> rebuilt = rebuild_suffix(current, t0, i, j);
    check_pass_dominance(rebuilt, current);
    current = std::move(rebuilt);
    ++passes;
  }
  RepairReport report;
  report.repaired = make_path(std::move(current), false);
  report.passes = passes;
  return report;
}

FormationPath repair_path(const FormationPath& path) { return repair_path_report(path).repaired; }

Graph reallocate_weight(const Graph& g, int i, int j) {
  require(i != j, ErrorCode::InvalidEdit, "nodes must be distinct");
  require(i >= 0 && i < g.size() && j >= 0 && j < g.size(), ErrorCode::InvalidEdit,
          "node index out of range");
  Graph out = g;
  for (int k = 0; k < g.size(); ++k) {
    if (k == i || k == j) continue;
    const double delta = std::min(g.weight(j, k), 1.0 - g.weight(i, k));
    if (delta <= 0.0) continue;
    out = out.with_pair_weight(i, k, out.weight(i, k) + delta)
              .with_pair_weight(j, k, out.weight(j, k) - delta);
  }
  return out;
}

}  // namespace seqnet
