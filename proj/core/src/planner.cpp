#include "seqnet/planner.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <unordered_map>

#include "parallel.hpp"
#include "seqnet/structures.hpp"

namespace seqnet {

namespace {

constexpr double kTieRelTol = 1e-12;
constexpr std::size_t kStateCap = 200000;

bool strictly_better(double a, double b) {
  return a - b > kTieRelTol * std::max({1.0, std::abs(a), std::abs(b)});
}

bool tied(double a, double b) { return !strictly_better(a, b) && !strictly_better(b, a); }

std::vector<double> right_vector(const Graph& g, const std::optional<NodeWeights>& theta) {
  if (!theta) return std::vector<double>(g.size(), 1.0);
  require(theta->size() == g.size(), ErrorCode::InvalidWeights, "theta length mismatch");
  return theta->theta;
}

}  // namespace

UtilitySpec UtilitySpec::kb(double phi) {
  UtilitySpec u;
  u.kind = UtilityKind::KbAggregate;
  u.phi = phi;
  return u;
}

UtilitySpec UtilitySpec::kb_squared(double phi) {
  UtilitySpec u;
  u.kind = UtilityKind::KbSquared;
  u.phi = phi;
  return u;
}

UtilitySpec UtilitySpec::diffusion(double phi, int rounds) {
  UtilitySpec u;
  u.kind = UtilityKind::Diffusion;
  u.phi = phi;
  u.rounds = rounds;
  return u;
}

UtilitySpec UtilitySpec::spectral() {
  UtilitySpec u;
  u.kind = UtilityKind::SpectralRadius;
  return u;
}

UtilitySpec UtilitySpec::walks(std::vector<double> coeffs) {
  UtilitySpec u;
  u.kind = UtilityKind::WalkWeighted;
  u.walk_coeffs = std::move(coeffs);
  return u;
}

UtilitySpec UtilitySpec::equilibrium_welfare(ResponseFunction psi, WelfareTransform transform) {
  UtilitySpec u;
  u.kind = UtilityKind::EquilibriumWelfare;
  u.psi = std::move(psi);
  u.transform = transform;
  return u;
}

std::string UtilitySpec::label() const {
  char buf[128];
  switch (kind) {
    case UtilityKind::WalkWeighted: {
      std::string out = "walks:";
      for (std::size_t k = 0; k < walk_coeffs.size(); ++k) {
        if (k > 0) out += ',';
        char num[32];
        std::snprintf(num, sizeof(num), "%g", walk_coeffs[k]);
        out += num;
      }
      return out;
    }
    case UtilityKind::KbAggregate:
      std::snprintf(buf, sizeof(buf), "kb(phi=%g)", phi);
      return buf;
    case UtilityKind::KbSquared:
      std::snprintf(buf, sizeof(buf), "kb2(phi=%g)", phi);
      return buf;
    case UtilityKind::Diffusion:
      std::snprintf(buf, sizeof(buf), "diffusion(phi=%g,L=%d)", phi, rounds);
      return buf;
    case UtilityKind::SpectralRadius:
      return "spectral";
    case UtilityKind::EquilibriumWelfare:
      std::snprintf(buf, sizeof(buf), "welfare(%s)", psi ? psi->label().c_str() : "?");
      return buf;
  }
  return "?";
}

double evaluate_utility(const Graph& g, const UtilitySpec& u) {
  switch (u.kind) {
    case UtilityKind::WalkWeighted: {
      require(!u.walk_coeffs.empty(), ErrorCode::InvalidParameter, "no walk coefficients");
      for (double c : u.walk_coeffs)
        require(c >= 0.0, ErrorCode::InvalidParameter, "walk coefficients must be non-negative");
      std::vector<double> v = right_vector(g, u.theta);
      double acc = 0.0;
      for (double c : u.walk_coeffs) {
        std::vector<double> next(g.size(), 0.0);
        for (int i = 0; i < g.size(); ++i) {
          double row = 0.0;
          for (int j = 0; j < g.size(); ++j) row += g.weight(i, j) * v[j];
          next[i] = row;
        }
        v = std::move(next);
        double total = 0.0;
        for (double x : v) total += x;
        acc += c * total;
      }
      return acc;
    }
    case UtilityKind::KbAggregate: {
      const std::vector<double> x = kb_solve(g, u.phi, right_vector(g, u.theta));
      double acc = 0.0;
      for (double xi : x) acc += xi;
      return acc;
    }
    case UtilityKind::KbSquared:
      require(!u.theta, ErrorCode::InvalidParameter,
              "node weights are not defined for the squared family");
      return aggregate_kb_squared(g, u.phi);
    case UtilityKind::Diffusion: {
      require(u.phi >= 0.0 && u.phi <= 1.0, ErrorCode::InvalidParameter,
              "diffusion decay outside [0,1]");
      std::vector<double> v = right_vector(g, u.theta);
      double acc = 0.0;
      for (double x : v) acc += x;
      double scale = 1.0;
      for (int k = 1; k <= u.rounds; ++k) {
        std::vector<double> next(g.size(), 0.0);
        for (int i = 0; i < g.size(); ++i) {
          double row = 0.0;
          for (int j = 0; j < g.size(); ++j) row += g.weight(i, j) * v[j];
          next[i] = row;
        }
        v = std::move(next);
        scale *= u.phi;
        double total = 0.0;
        for (double x : v) total += x;
        acc += scale * total;
      }
      return acc;
    }
    case UtilityKind::SpectralRadius:
      require(!u.theta, ErrorCode::InvalidParameter,
              "node weights are not defined for the spectral family");
      return spectral_radius(g);
    case UtilityKind::EquilibriumWelfare: {
      require(u.psi.has_value(), ErrorCode::InvalidParameter, "missing response function");
      require(!u.theta, ErrorCode::InvalidParameter,
              "node weights are not defined for equilibrium welfare");
      const EquilibriumTrace trace = solve_equilibrium(g, *u.psi);
      return planner_welfare(trace.actions, u.transform);
    }
  }
  fail(ErrorCode::InvalidParameter, "unknown utility kind");
}

double evaluate_path(const FormationPath& s, const DiscountSchedule& d, const UtilitySpec& u) {
  require(d.horizon() == s.horizon(), ErrorCode::InvalidSchedule,
          "schedule length differs from path length");
  double acc = 0.0;
  for (int t = 1; t <= s.horizon(); ++t) {
    const double weight = d.at_period(t);
    if (weight == 0.0) continue;
    acc += weight * evaluate_utility(s.at_period(t), u);
  }
  return acc;
}

DiscountSchedule discount_farsighted(int horizon) {
  require(horizon >= 1, ErrorCode::InvalidHorizon, "horizon must be positive");
  DiscountSchedule d;
  d.weights.assign(horizon, 0.0);
  d.weights.back() = 1.0;
  return d;
}

DiscountSchedule discount_geometric(double delta, int horizon) {
  require(horizon >= 1, ErrorCode::InvalidHorizon, "horizon must be positive");
  require(delta > 0.0 && delta <= 1.0, ErrorCode::InvalidParameter, "delta outside (0,1]");
  DiscountSchedule d;
  d.weights.resize(horizon);
  double w = 1.0;
  for (int t = 0; t < horizon; ++t) {
    d.weights[t] = w;
    w *= delta;
  }
  return d;
}

DiscountSchedule discount_myopic(double epsilon, int horizon) {
  require(epsilon > 0.0 && epsilon <= 1.0, ErrorCode::InvalidParameter, "epsilon outside (0,1]");
  return discount_geometric(epsilon, horizon);
}

namespace {

// Greedy tie-breaking wants the canonical key; past the exact-canonicalization
// cap the successor scan order (lexicographic pair order) decides instead.
std::string tie_key(const Graph& g) {
  if (g.size() <= 10) return canonical_form(g).key;
  return {};
}

}  // namespace

FormationPath greedy_path(int n, int horizon, const UtilitySpec& u) {
  require(horizon >= 1, ErrorCode::InvalidHorizon, "horizon must be positive");
  require(horizon <= n * (n - 1) / 2, ErrorCode::InvalidHorizon,
          "horizon exceeds the link capacity");
  FormationPath path;
  Graph current = Graph::empty(n);
  for (int t = 0; t < horizon; ++t) {
    std::vector<Graph> options = successors(current);
    std::vector<double> values(options.size());
    detail::parallel_for(options.size(),
                         [&](std::size_t k) { values[k] = evaluate_utility(options[k], u); });
    int best = -1;
    std::string best_key;
    for (std::size_t k = 0; k < options.size(); ++k) {
      if (best < 0 || strictly_better(values[k], values[best])) {
        best = static_cast<int>(k);
        best_key.clear();
      } else if (tied(values[k], values[best])) {
        if (best_key.empty()) best_key = tie_key(options[best]);
        std::string key = tie_key(options[k]);
        if (!key.empty() && key < best_key) {
          best = static_cast<int>(k);
          best_key = std::move(key);
        }
      }
    }
    current = options[best];
    path.graphs.push_back(current);
  }
  return path;
}

namespace {

struct DpState {
  Graph rep;
  std::string key;
  double utility = 0.0;
  double value_to_go = 0.0;
  std::vector<int> children;
  std::vector<int> best_children;
};

struct DpTable {
  std::vector<std::vector<DpState>> layers;
};

DpTable build_layers(int n, int horizon, const UtilitySpec& u, bool restrict_to_nsg) {
  DpTable table;
  table.layers.resize(horizon + 1);
  table.layers[0].push_back(DpState{Graph::empty(n), canonical_form(Graph::empty(n)).key, 0.0,
                                    0.0, {}, {}});
  std::size_t total_states = 1;
  for (int t = 0; t < horizon; ++t) {
    std::vector<DpState>& layer = table.layers[t];
    // Expand every state in parallel, then merge in state order so child
    // indices are deterministic.
    std::vector<std::vector<std::pair<std::string, Graph>>> expansions(layer.size());
    detail::parallel_for(layer.size(), [&](std::size_t s) {
      for (Graph& succ : successors(layer[s].rep)) {
        if (restrict_to_nsg && !is_nsg(succ)) continue;
        std::string key = canonical_form(succ).key;
        expansions[s].emplace_back(std::move(key), std::move(succ));
      }
    });
    std::vector<DpState>& next = table.layers[t + 1];
    std::unordered_map<std::string, int> index;
    for (std::size_t s = 0; s < layer.size(); ++s) {
      for (auto& [key, graph] : expansions[s]) {
        auto [it, inserted] = index.emplace(key, static_cast<int>(next.size()));
        if (inserted) {
          next.push_back(DpState{std::move(graph), key, 0.0, 0.0, {}, {}});
        }
        std::vector<int>& children = layer[s].children;
        if (std::find(children.begin(), children.end(), it->second) == children.end())
          children.push_back(it->second);
      }
      require(!layer[s].children.empty(), ErrorCode::InvalidHorizon,
              "a period has no feasible successor");
    }
    total_states += next.size();
    require(total_states <= kStateCap, ErrorCode::SizeLimit,
            "state space above the configured cap; consider restricting to NSG states");
    detail::parallel_for(next.size(),
                         [&](std::size_t s) { next[s].utility = evaluate_utility(next[s].rep, u); });
  }
  return table;
}

// Backward induction on values rescaled by the suffix maximum of the
// discount weights. Rapidly decaying schedules (the myopic family) are the
// point: absolute contributions like eps^(T-1) sink below double precision,
// while the rescaled recursion keeps every period's comparison at unit
// scale, which is what makes the lexicographic preference resolvable.
void backward_induction(DpTable& table, const DiscountSchedule& d, double& root_scale) {
  const int horizon = static_cast<int>(table.layers.size()) - 1;
  std::vector<double> suffix_max(horizon + 1, 0.0);
  for (int t = horizon - 1; t >= 0; --t)
    suffix_max[t] = std::max(d.weights[t], suffix_max[t + 1]);
  root_scale = suffix_max[0];

  for (int t = horizon - 1; t >= 0; --t) {
    std::vector<DpState>& layer = table.layers[t];
    const std::vector<DpState>& next = table.layers[t + 1];
    if (suffix_max[t] == 0.0) {
      for (DpState& state : layer) {
        state.value_to_go = 0.0;
        state.best_children = state.children;
      }
      continue;
    }
    const double immediate = d.weights[t] / suffix_max[t];        // weight on u(G(t+1))
    const double carry = suffix_max[t + 1] / suffix_max[t];       // rescale of the tail
    for (DpState& state : layer) {
      double best = 0.0;
      bool first = true;
      std::vector<int> argmax;
      for (int c : state.children) {
        const double candidate = immediate * next[c].utility + carry * next[c].value_to_go;
        if (first || strictly_better(candidate, best)) {
          best = candidate;
          argmax.assign(1, c);
          first = false;
        } else if (tied(candidate, best)) {
          argmax.push_back(c);
        }
      }
      state.value_to_go = best;
      state.best_children = std::move(argmax);
    }
  }
}

void check_dp_preconditions(int n, int horizon, const DiscountSchedule& d, bool restrict_to_nsg) {
  require(horizon >= 1, ErrorCode::InvalidHorizon, "horizon must be positive");
  require(horizon <= n * (n - 1) / 2, ErrorCode::InvalidHorizon,
          "horizon exceeds the link capacity");
  require(d.horizon() == horizon, ErrorCode::InvalidSchedule,
          "schedule length differs from the horizon");
  if (restrict_to_nsg)
    require(n <= 9, ErrorCode::SizeLimit, "restricted search is limited to n <= 9");
  else
    require(n <= 7, ErrorCode::SizeLimit,
            "unrestricted search is limited to n <= 7; consider restricting to NSG states");
}

}  // namespace

DpResult optimal_path_dp(int n, int horizon, const DiscountSchedule& d, const UtilitySpec& u,
                         bool restrict_to_nsg) {
  check_dp_preconditions(n, horizon, d, restrict_to_nsg);
  DpTable table = build_layers(n, horizon, u, restrict_to_nsg);
  double root_scale = 0.0;
  backward_induction(table, d, root_scale);

  DpResult result;
  result.value = root_scale * table.layers[0][0].value_to_go;
  for (const auto& layer : table.layers) result.states += layer.size();

  // Realize one optimizer as a labeled feasible path: at each period follow
  // the best child with the smallest canonical key, materialized as an edit
  // on the current labeled graph.
  Graph current = Graph::empty(n);
  int state = 0;
  for (int t = 0; t < horizon; ++t) {
    const DpState& here = table.layers[t][state];
    int chosen = -1;
    for (int c : here.best_children)
      if (chosen < 0 || table.layers[t + 1][c].key < table.layers[t + 1][chosen].key) chosen = c;
    const std::string& want = table.layers[t + 1][chosen].key;
    bool placed = false;
    for (const Graph& succ : successors(current)) {
      if (canonical_form(succ).key != want) continue;
      current = succ;
      placed = true;
      break;
    }
    require(placed, ErrorCode::InvariantViolation, "failed to realize the optimal class path");
    result.path.graphs.push_back(current);
    state = chosen;
  }
  return result;
}

std::vector<std::vector<Graph>> enumerate_optimal_class_paths(int n, int horizon,
                                                              const DiscountSchedule& d,
                                                              const UtilitySpec& u,
                                                              bool restrict_to_nsg,
                                                              std::size_t path_cap) {
  check_dp_preconditions(n, horizon, d, restrict_to_nsg);
  DpTable table = build_layers(n, horizon, u, restrict_to_nsg);
  double root_scale = 0.0;
  backward_induction(table, d, root_scale);

  std::vector<std::vector<Graph>> out;
  std::vector<int> stack;
  auto descend = [&](auto&& self, int t, int state) -> void {
    if (t == horizon) {
      std::vector<Graph> path;
      path.reserve(stack.size());
      for (int i = 0; i < horizon; ++i) path.push_back(table.layers[i + 1][stack[i]].rep);
      out.push_back(std::move(path));
      require(out.size() <= path_cap, ErrorCode::SizeLimit, "too many optimal paths to enumerate");
      return;
    }
    for (int c : table.layers[t][state].best_children) {
      stack.push_back(c);
      self(self, t + 1, c);
      stack.pop_back();
    }
  };
  descend(descend, 0, 0);
  return out;
}

Graph delegated_step(const Graph& g, int agent, double phi_agent) {
  require(agent >= 0 && agent < g.size(), ErrorCode::InvalidEdit, "agent index out of range");
  require(g.unweighted(), ErrorCode::InvalidInput, "delegation needs an unweighted graph");
  int best = -1;
  double best_value = 0.0;
  Graph best_graph = g;
  for (int candidate = 0; candidate < g.size(); ++candidate) {
    if (candidate == agent || g.linked(agent, candidate)) continue;
    Graph option = g.with_link(LinkEdit(agent, candidate));
    const double value = katz_bonacich(option, phi_agent).values[agent];
    if (best < 0 || strictly_better(value, best_value)) {
      best = candidate;
      best_value = value;
      best_graph = std::move(option);
    }
  }
  require(best >= 0, ErrorCode::NoMove, "agent is already linked to everyone");
  return best_graph;
}

FormationPath delegated_path(int n, int horizon, const AgentSequence& agents, double phi_agent) {
  require(agents.horizon() == horizon, ErrorCode::InvalidSchedule,
          "agent sequence length differs from the horizon");
  FormationPath path;
  Graph current = Graph::empty(n);
  for (int t = 0; t < horizon; ++t) {
    current = delegated_step(current, agents.agents[t], phi_agent);
    path.graphs.push_back(current);
  }
  return path;
}

AgentSequence delegation_recipe(const FormationPath& path) {
  require(!path.weighted, ErrorCode::InvalidPath, "delegation applies to unweighted paths");
  AgentSequence seq;
  const int n = path.nodes();
  Graph before = Graph::empty(n);
  for (const Graph& after : path.graphs) {
    const LinkEdit edit = edit_between(before, after);
    auto nested_in = [&](int x, int y) {
      for (int k = 0; k < n; ++k) {
        if (k == x || k == y) continue;
        if (before.linked(x, k) && !before.linked(y, k)) return false;
      }
      return true;
    };
    int agent;
    if (before.degree(edit.i) != before.degree(edit.j))
      agent = before.degree(edit.i) < before.degree(edit.j) ? edit.i : edit.j;
    else
      agent = nested_in(edit.i, edit.j) ? edit.i : edit.j;
    seq.agents.push_back(agent);
    before = after;
  }
  return seq;
}

}  // namespace seqnet
