// Acceptance suite: one criterion per line, pass or fail, with timings.
// Exit code is the number of failing criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "../oracles.hpp"
#include "seqnet/experiment.hpp"
#include "seqnet/games.hpp"
#include "seqnet/metrics.hpp"
#include "seqnet/planner.hpp"
#include "seqnet/reallocation.hpp"
#include "seqnet/structures.hpp"
#include "seqnet/weighted.hpp"

using namespace seqnet;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    pass = false;
    if (detail.empty()) detail = why;
  }
};

std::vector<Graph> classes_with(int n) {
  std::map<CanonicalForm, Graph> reps;
  for (Graph& g : oracle::all_labeled_graphs(n)) reps.emplace(canonical_form(g), std::move(g));
  std::vector<Graph> out;
  out.reserve(reps.size());
  for (auto& [key, g] : reps) out.push_back(std::move(g));
  return out;
}

// ---- criterion 1: four-way comparison reproduces the reference values ----
Outcome criterion_table2(double& seconds) {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  const Table2Report report = run_table2(5e-5);
  seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  for (const Table2Row& row : report.rows) {
    char line[128];
    std::snprintf(line, sizeof(line), "%s computed=%.7f expected=%.4f (|d|=%.1e)%s",
                  row.label.c_str(), row.value, row.expected, std::abs(row.value - row.expected),
                  row.maximizer ? " max" : "");
    out.detail += (out.detail.empty() ? "" : "; ") + std::string(line);
  }
  if (!report.pass) {
    out.pass = false;
    out.detail +=
        "; three reference digits are not reproducible at 5e-5: the recomputed values are "
        "confirmed by an independent series oracle, and the table passes only at 1e-3";
  }
  if (seconds >= 1.0) out.fail("runtime above 1s");
  return out;
}

// ---- criterion 2: greedy induces quasi-complete graphs, whole battery ----
Outcome criterion_greedy_battery(double& seconds) {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  const std::vector<UtilitySpec> battery = {
      UtilitySpec::kb(0.01), UtilitySpec::kb_squared(0.01), UtilitySpec::diffusion(0.05, 5),
      UtilitySpec::walks({1, 1, 1, 1})};
  for (int n = 4; n <= 7; ++n) {
    const int horizon = std::min(12, n * (n - 1) / 2);
    for (const UtilitySpec& u : battery) {
      const FormationPath path = greedy_path(n, horizon, u);
      for (int t = 1; t <= horizon; ++t)
        if (!is_quasi_complete(path.at_period(t)).has_value())
          out.fail("non-QC period " + std::to_string(t) + " at n=" + std::to_string(n) + " under " +
                   u.label());
    }
  }
  seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (seconds >= 10.0) out.fail("runtime above 10s");
  return out;
}

// ---- criterion 3: restricted and unrestricted optima coincide ----
Outcome criterion_dp_equivalence(double& seconds) {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  const UtilitySpec u = UtilitySpec::kb_squared(0.02);
  for (double delta : {0.2, 0.9}) {
    const DiscountSchedule d = discount_geometric(delta, 7);
    const DpResult full = optimal_path_dp(6, 7, d, u);
    const DpResult restricted = optimal_path_dp(6, 7, d, u, true);
    if (std::abs(full.value - restricted.value) > 1e-12)
      out.fail("value gap " + std::to_string(full.value - restricted.value) + " at delta=" +
               std::to_string(delta));
    for (const auto& classes : enumerate_optimal_class_paths(6, 7, d, u))
      for (const Graph& g : classes)
        if (!is_nsg(g)) out.fail("non-NSG optimizer period at delta=" + std::to_string(delta));
  }
  seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (seconds >= 300.0) out.fail("runtime above 5min");
  return out;
}

// ---- criterion 4: full-set reallocation strictly raises walk counts ----
Outcome criterion_reallocation(double& seconds) {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  for (int n = 2; n <= 6; ++n) {
    for (const Graph& g : classes_with(n)) {
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          if (i == j) continue;
          bool i_has_exclusive = false, j_has_exclusive = false;
          for (int l = 0; l < n; ++l) {
            if (l == i || l == j) continue;
            if (g.linked(i, l) && !g.linked(j, l)) i_has_exclusive = true;
            if (g.linked(j, l) && !g.linked(i, l)) j_has_exclusive = true;
          }
          if (!j_has_exclusive) continue;  // L empty: nothing to move
          if (!i_has_exclusive) continue;  // nested case: the move is a relabeling
          const Graph moved = reallocate_neighbors(g, i, j).first;
          for (int k = 2; k <= 10; ++k) {
            const double before = walk_count(g, k);
            const double after = walk_count(moved, k);
            if (!(after > before)) out.fail("no strict gain at n=" + std::to_string(n));
            if (n <= 5 && k <= 5) {
              if (before != static_cast<double>(oracle::enumerate_walks(g, k)) ||
                  after != static_cast<double>(oracle::enumerate_walks(moved, k)))
                out.fail("iterative counts disagree with enumeration");
            }
          }
        }
    }
  }
  seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

// ---- criterion 5: the clique extension dominates the whole alpha family ----
Outcome criterion_alpha_dominance(double& seconds) {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  int tested = 0;
  long long strict = 0;
  std::string ties;
  for (int t = 2; t <= 20; ++t) {
    const Graph base = quasi_complete(22, t);
    Graph winner = Graph::empty(1);
    try {
      winner = alpha_family(base, 1.0);
    } catch (const Error&) {
      continue;  // clique boundary: the family degenerates to one successor
    }
    ++tested;
    for (int tenth = 0; tenth <= 9; ++tenth) {
      const Graph member = alpha_family(base, tenth / 10.0);
      for (int k = 2; k <= 15; ++k) {
        if (walk_count(winner, k) > walk_count(member, k)) {
          ++strict;
        } else {
          out.pass = false;
          char buf[64];
          std::snprintf(buf, sizeof(buf), "(t=%d alpha=%.1f k=%d %s)", t, tenth / 10.0, k,
                        walk_count(winner, k) == walk_count(member, k) ? "tie" : "reversed");
          ties += buf;
        }
      }
    }
  }
  if (tested < 15) out.fail("too few two-successor bases exercised");
  if (!out.pass)
    out.detail = std::to_string(strict) + " strict comparisons; non-strict points: " + ties +
                 " -- at overflow-1 bases the two whole-link successors add the same "
                 "degree-square mass, so the length-2 counts tie exactly at alpha=0; strict "
                 "dominance holds from length 3 on";
  seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

// ---- criterion 6: path repair settles quickly and dominates its input ----
Outcome criterion_repair(double& seconds) {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  std::mt19937 rng(20240811);
  for (int trial = 0; trial < 1000; ++trial) {
    const FormationPath path = oracle::random_path(6, 8, rng);
    bool had_violation = false;
    for (const Graph& g : path.graphs)
      if (!is_nsg(g)) had_violation = true;
    const RepairReport report = repair_path_report(path);
    if (report.passes > 8) out.fail("more than T passes");
    bool strict = false;
    for (int t = 1; t <= 8; ++t) {
      if (!is_nsg(report.repaired.at_period(t))) out.fail("non-NSG period survives repair");
      for (int k = 2; k <= 10; ++k) {
        const double before = walk_count(path.at_period(t), k);
        const double after = walk_count(report.repaired.at_period(t), k);
        if (after < before) out.fail("repair lost walk counts");
        if (after > before) strict = true;
      }
    }
    if (had_violation && !strict) out.fail("no strict improvement on a violating input");
  }
  seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

// ---- criterion 7: the linear game lands on the direct solve ----
Outcome criterion_linear_game(double& seconds) {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  const double phi = 0.05;
  for (int n = 1; n <= 7; ++n)
    for (int t = 0; t <= n * (n - 1) / 2; ++t)
      for (const Graph& g : enumerate_nsg(n, t)) {
        const EquilibriumTrace trace = solve_equilibrium(g, ResponseFunction::linear(1.0, phi));
        const CentralityVector b = katz_bonacich(g, phi);
        for (int i = 0; i < n; ++i)
          if (std::abs(trace.actions[i] - b.values[i]) > 1e-10)
            out.fail("sup-norm gap above 1e-10 at n=" + std::to_string(n) +
                     " t=" + std::to_string(t));
      }
  seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

// ---- criterion 8: convex-response iterate sums order the two placements ----
Outcome criterion_iterate_sums(double& seconds) {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  const std::vector<ResponseFunction> catalog = {
      ResponseFunction::quadratic(1.0, 0.05, 0.01),
      ResponseFunction::quadratic(0.5, 0.08, 0.005),
      ResponseFunction::quadratic(1.0, 0.1, 0.001),
  };
  long long exercised = 0;
  for (int n = 3; n <= 5; ++n) {
    for (const Graph& base : oracle::all_labeled_graphs(n)) {
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          if (i == j) continue;
          bool j_inside_i = true, proper = false;
          std::vector<int> free_nodes;
          for (int l = 0; l < n; ++l) {
            if (l == i || l == j) continue;
            if (base.linked(j, l) && !base.linked(i, l)) j_inside_i = false;
            if (base.linked(i, l) && !base.linked(j, l)) proper = true;
            if (!base.linked(i, l) && !base.linked(j, l)) free_nodes.push_back(l);
          }
          if (!j_inside_i || !proper || free_nodes.empty()) continue;
          for (unsigned mask = 1; mask < (1u << free_nodes.size()); ++mask) {
            Graph to_i = base, to_j = base;
            for (std::size_t b = 0; b < free_nodes.size(); ++b)
              if (mask & (1u << b)) {
                to_i = to_i.with_link(LinkEdit(i, free_nodes[b]));
                to_j = to_j.with_link(LinkEdit(j, free_nodes[b]));
              }
            for (const ResponseFunction& psi : catalog)
              for (int m = 2; m <= 12; ++m)
                if (!(iterate_sums(to_i, psi, m) > iterate_sums(to_j, psi, m)))
                  out.fail("sum ordering failed at n=" + std::to_string(n) +
                           " m=" + std::to_string(m));
            ++exercised;
          }
        }
    }
  }
  if (exercised < 500) out.fail("battery unexpectedly small");
  seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

// ---- criterion 9: midpoint convexity of aggregate centrality ----
Outcome criterion_convexity(double& seconds) {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  std::mt19937 rng(5150);
  for (int trial = 0; trial < 10000; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 6);
    const Graph g = oracle::random_weighted_graph(n, rng);
    const Graph h = oracle::random_weighted_graph(n, rng);
    const double phi = 0.9 / std::max({spectral_radius(g), spectral_radius(h), 1.0});
    std::vector<double> mixed(g.data().size());
    for (std::size_t k = 0; k < mixed.size(); ++k)
      mixed[k] = 0.5 * (g.data()[k] + h.data()[k]);
    const double lhs = aggregate_kb(Graph::from_matrix(n, mixed), phi);
    const double rhs = 0.5 * (aggregate_kb(g, phi) + aggregate_kb(h, phi));
    if (lhs > rhs + 1e-12) out.fail("midpoint inequality violated at trial " + std::to_string(trial));
  }
  seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

// ---- criterion 10: weight spreading cannot beat whole links ----
Outcome criterion_grid_paths(double& seconds) {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  const UtilitySpec u = UtilitySpec::kb(0.05);
  const DiscountSchedule d = discount_geometric(0.9, 4);
  const double unweighted = optimal_path_dp(5, 4, d, u).value;
  for (int resolution : {2, 4, 8}) {
    const double grid = best_grid_path_value(5, 4, d, u, resolution);
    if (grid > unweighted + 1e-9)
      out.fail("grid value exceeds the unweighted optimum at resolution " +
               std::to_string(resolution));
  }
  for (const auto& classes : enumerate_optimal_class_paths(5, 4, d, u))
    for (const Graph& g : classes)
      if (!is_nsg(g)) out.fail("unweighted optimizer leaves the NSG family");
  seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

// ---- criterion 11: delegated agents rebuild the planner's sequence ----
Outcome criterion_delegation(double& seconds) {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  for (int n = 4; n <= 7; ++n) {
    const int horizon = std::min(10, n * (n - 1) / 2);
    const FormationPath greedy = greedy_path(n, horizon, UtilitySpec::kb_squared(0.01));
    const AgentSequence recipe = delegation_recipe(greedy);
    const FormationPath delegated = delegated_path(n, horizon, recipe, 0.01);
    for (int t = 1; t <= horizon; ++t)
      if (!isomorphic(delegated.at_period(t), greedy.at_period(t)))
        out.fail("period " + std::to_string(t) + " diverges at n=" + std::to_string(n));
  }
  seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

}  // namespace

int main() {
  struct Entry {
    int id;
    const char* name;
    std::function<Outcome(double&)> body;
  };
  const std::vector<Entry> criteria = {
      {1, "four-way NSG comparison at n=7, t=8 (runtime < 1s)", criterion_table2},
      {2, "greedy battery forms quasi-complete graphs (runtime < 10s)", criterion_greedy_battery},
      {3, "unrestricted and NSG-restricted optima agree (runtime < 5min)",
       criterion_dp_equivalence},
      {4, "neighbour reallocation strictly raises walk counts (n <= 6, oracle-checked)",
       criterion_reallocation},
      {5, "clique extension dominates every alpha member (t in [2,20], n = 22)",
       criterion_alpha_dominance},
      {6, "repair settles within T passes on 1000 random paths", criterion_repair},
      {7, "linear game equals the direct centrality solve (NSG corpus, n <= 7)",
       criterion_linear_game},
      {8, "convex iterate sums order bundle placements (exhaustive n <= 5, m in [2,12])",
       criterion_iterate_sums},
      {9, "midpoint convexity of aggregate centrality (10000 weighted pairs)",
       criterion_convexity},
      {10, "grid-weighted paths cannot beat whole links (n=5, T=4)", criterion_grid_paths},
      {11, "delegation reproduces the planner's sequence (n in [4,7])", criterion_delegation},
  };

  int failures = 0;
  for (const Entry& entry : criteria) {
    double seconds = 0.0;
    Outcome outcome;
    try {
      outcome = entry.body(seconds);
    } catch (const std::exception& e) {
      outcome.pass = false;
      outcome.detail = std::string("exception: ") + e.what();
    }
    std::printf("[%s] criterion %2d: %s [%.2fs]%s%s\n", outcome.pass ? "PASS" : "FAIL", entry.id,
                entry.name, seconds, outcome.detail.empty() ? "" : " -- ",
                outcome.detail.c_str());
    if (!outcome.pass) ++failures;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures;
}
