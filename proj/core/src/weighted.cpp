#include "seqnet/weighted.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_map>

#include "parallel.hpp"
#include "seqnet/metrics.hpp"
#include "seqnet/structures.hpp"

namespace seqnet {

namespace {

constexpr double kFeasTol = 1e-12;

double pair_capacity(const Graph& g, int i, int j) { return 1.0 - g.weight(i, j); }

}  // namespace

Graph WeightEdit::apply(const Graph& g) const {
  Graph out = g;
  for (const auto& [pair, delta] : increments) {
    require(delta >= 0.0, ErrorCode::InvalidWeights, "increments must be non-negative");
    out = out.with_pair_weight(pair.i, pair.j, out.weight(pair.i, pair.j) + delta);
  }
  return out;
}

double WeightEdit::mass() const {
  double total = 0.0;
  for (const auto& [pair, delta] : increments) total += delta;
  return total;
}

std::vector<Graph> weighted_successors_grid(const Graph& g, int resolution) {
  require(resolution >= 1, ErrorCode::InvalidParameter, "resolution must be positive");
  const int n = g.size();
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);

  std::vector<Graph> out;
  for (const auto& [i, j] : pairs)
    if (pair_capacity(g, i, j) >= 1.0 - kFeasTol)
      out.push_back(g.with_pair_weight(i, j, g.weight(i, j) + 1.0));
  for (std::size_t p = 0; p < pairs.size(); ++p)
    for (std::size_t q = p + 1; q < pairs.size(); ++q)
      for (int a = 1; a < resolution; ++a) {
        const double alpha = static_cast<double>(a) / resolution;
        if (alpha > pair_capacity(g, pairs[p].first, pairs[p].second) + kFeasTol) continue;
        if (1.0 - alpha > pair_capacity(g, pairs[q].first, pairs[q].second) + kFeasTol) continue;
        Graph next = g.with_pair_weight(pairs[p].first, pairs[p].second,
                                        g.weight(pairs[p].first, pairs[p].second) + alpha);
        next = next.with_pair_weight(pairs[q].first, pairs[q].second,
                                     next.weight(pairs[q].first, pairs[q].second) + (1.0 - alpha));
        out.push_back(std::move(next));
      }
  require(!out.empty(), ErrorCode::Saturation, "no grid placement of a unit of weight fits");
  return out;
}

Graph alpha_family(const Graph& base, double alpha) {
  require(alpha >= 0.0 && alpha <= 1.0, ErrorCode::InvalidParameter, "alpha outside [0,1]");
  const std::optional<QcDecomposition> decomp = is_quasi_complete(base);
  require(decomp.has_value(), ErrorCode::InvalidBase, "base graph is not quasi-complete");
  require(decomp->overflow >= 1, ErrorCode::InvalidBase,
          "clique-boundary base has a single NSG successor");
  int isolated = -1;
  for (int v = 0; v < base.size(); ++v)
    if (base.degree(v) == 0) {
      isolated = v;
      break;
    }
  require(isolated >= 0, ErrorCode::InvalidBase,
          "no isolated node: base has a single NSG successor");
  const int clique_extension = decomp->clique_nodes[static_cast<std::size_t>(decomp->overflow)];
  const int spoke = decomp->spoke_node.value();
  const int hub = decomp->clique_nodes.front();
  Graph out = base;
  if (alpha > 0.0) out = out.with_pair_weight(clique_extension, spoke, alpha);
  if (alpha < 1.0) out = out.with_pair_weight(hub, isolated, 1.0 - alpha);
  return out;
}

namespace {

double kb2_value(const Graph& g, double phi) { return aggregate_kb_squared(g, phi); }

}  // namespace

Graph best_weighted_step_kb2(const Graph& g, double phi, int resolution) {
  require(is_quasi_complete(g).has_value(), ErrorCode::InvalidBase,
          "weighted step is analyzed from a quasi-complete base");
  std::vector<Graph> grid = weighted_successors_grid(g, resolution);
  std::vector<double> values(grid.size());
  detail::parallel_for(grid.size(), [&](std::size_t k) { values[k] = kb2_value(grid[k], phi); });
  std::size_t best = 0;
  for (std::size_t k = 1; k < grid.size(); ++k)
    if (values[k] > values[best]) best = k;
  Graph champion = grid[best];
  double champion_value = values[best];

  bool family_exists = true;
  try {
    alpha_family(g, 1.0);
  } catch (const Error&) {
    family_exists = false;
  }
  if (family_exists) {
    const auto family_value = [&](double alpha) { return kb2_value(alpha_family(g, alpha), phi); };
    // Golden-section on [0,1] assuming unimodality in alpha.
    const double inv_phi_ratio = (std::sqrt(5.0) - 1.0) / 2.0;
    double lo = 0.0, hi = 1.0;
    double x1 = hi - inv_phi_ratio * (hi - lo);
    double x2 = lo + inv_phi_ratio * (hi - lo);
    double f1 = family_value(x1);
    double f2 = family_value(x2);
    while (hi - lo > 1e-10) {
      if (f1 < f2) {
        lo = x1;
        x1 = x2;
        f1 = f2;
        x2 = lo + inv_phi_ratio * (hi - lo);
        f2 = family_value(x2);
      } else {
        hi = x2;
        x2 = x1;
        f2 = f1;
        x1 = hi - inv_phi_ratio * (hi - lo);
        f1 = family_value(x1);
      }
    }
    double alpha_star = (lo + hi) / 2.0;
    double value_star = family_value(alpha_star);
    // Dense fallback sweep guarding the unimodality assumption. The sweep
    // hits the exact endpoints, so a refined alpha that crawled within
    // tolerance of 0 or 1 resolves to the unweighted member.
    for (int step = 0; step <= 1000; ++step) {
      const double alpha = step / 1000.0;
      const double value = family_value(alpha);
      if (value > value_star + 1e-13 ||
          (value >= value_star - 1e-13 && (alpha == 0.0 || alpha == 1.0))) {
        value_star = value;
        alpha_star = alpha;
      }
    }
    if (value_star > champion_value + 1e-13) {
      champion = alpha_family(g, alpha_star);
      champion_value = value_star;
    }
  }
  return champion;
}

std::optional<PathPerturbation> perturb_weighted_path(const FormationPath& path, double delta) {
  require(delta > 0.0 && delta < 1.0, ErrorCode::InvalidParameter, "delta outside (0,1)");
  validate_path(path);
  const int n = path.nodes();
  int first_weighted = -1;
  for (int t = 0; t < path.horizon(); ++t)
    if (!path.graphs[static_cast<std::size_t>(t)].unweighted()) {
      first_weighted = t;
      break;
    }
  if (first_weighted < 0) return std::nullopt;  // extreme point: unweighted throughout

  const Graph& pivot = path.graphs[static_cast<std::size_t>(first_weighted)];
  std::vector<std::pair<int, int>> interior;
  for (int i = 0; i < n && interior.size() < 2; ++i)
    for (int j = i + 1; j < n && interior.size() < 2; ++j) {
      const double w = pivot.weight(i, j);
      if (w > kFeasTol && w < 1.0 - kFeasTol) interior.emplace_back(i, j);
    }
  require(interior.size() == 2, ErrorCode::InvariantViolation,
          "first weighted period must carry two interior pairs");
  const auto [i, j] = interior[0];
  const auto [k, l] = interior[1];

  PathPerturbation out;
  out.plus.weighted = true;
  out.minus.weighted = true;
  for (int t = 0; t < path.horizon(); ++t) {
    const Graph& g = path.graphs[static_cast<std::size_t>(t)];
    if (t < first_weighted) {
      out.plus.graphs.push_back(g);
      out.minus.graphs.push_back(g);
      continue;
    }
    const double gij = g.weight(i, j);
    const double gkl = g.weight(k, l);
    Graph plus = g.with_pair_weight(i, j, std::max(gij - delta, gij + gkl - 1.0))
                     .with_pair_weight(k, l, std::min(gkl + delta, 1.0));
    Graph minus = g.with_pair_weight(i, j, std::min(gij + delta, 1.0))
                      .with_pair_weight(k, l, std::max(gkl - delta, gkl + gij - 1.0));
    out.plus.graphs.push_back(std::move(plus));
    out.minus.graphs.push_back(std::move(minus));
  }
  validate_path(out.plus);
  validate_path(out.minus);
  return out;
}

namespace {

// Lexicographic minimization of the upper-triangle entries over permutations
// grouped by node strength. Grid weights are dyadic, so the doubles compare
// exactly and equal keys mean weighted-isomorphic states.
class WeightedCanonicalSearch {
 public:
  explicit WeightedCanonicalSearch(const Graph& g) : g_(g), n_(g.size()) {
    std::vector<double> strength(n_);
    for (int i = 0; i < n_; ++i) strength[i] = g.strength(i);
    std::vector<int> order(n_);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return strength[a] > strength[b]; });
    class_of_slot_.resize(n_);
    int cls = 0;
    for (int s = 0; s < n_; ++s) {
      if (s > 0 && std::abs(strength[order[s]] - strength[order[s - 1]]) > 1e-9) ++cls;
      class_of_slot_[s] = cls;
      classes_.resize(cls + 1);
      classes_[cls].push_back(order[s]);
    }
    placed_.assign(n_, -1);
    used_.assign(n_, false);
    const std::size_t entries = static_cast<std::size_t>(n_) * (n_ - 1) / 2;
    entries_.reserve(entries);
    best_.assign(entries, 2.0);  // weights live in [0,1]
    descend(0);
  }

  std::string key() const {
    std::string out;
    out.push_back(static_cast<char>(n_));
    out.append(reinterpret_cast<const char*>(best_.data()), best_.size() * sizeof(double));
    return out;
  }

 private:
  void descend(int slot) {
    if (slot == n_) {
      if (entries_ < best_) best_ = entries_;
      return;
    }
    for (int node : classes_[class_of_slot_[slot]]) {
      if (used_[node]) continue;
      const std::size_t mark = entries_.size();
      bool worse = false;
      for (int prev = 0; prev < slot; ++prev) {
        const double w = g_.weight(placed_[prev], node);
        if (w > best_[entries_.size()]) {
          worse = true;
          break;
        }
        entries_.push_back(w);
        if (w < best_[entries_.size() - 1])
          std::fill(best_.begin() + static_cast<std::ptrdiff_t>(entries_.size() - 1), best_.end(),
                    2.0);
      }
      if (!worse) {
        placed_[slot] = node;
        used_[node] = true;
        descend(slot + 1);
        used_[node] = false;
      }
      entries_.resize(mark);
    }
  }

  const Graph& g_;
  int n_;
  std::vector<int> class_of_slot_;
  std::vector<std::vector<int>> classes_;
  std::vector<int> placed_;
  std::vector<bool> used_;
  std::vector<double> entries_;
  std::vector<double> best_;
};

std::string weighted_key(const Graph& g) { return WeightedCanonicalSearch(g).key(); }

struct GridState {
  Graph rep;
  double utility = 0.0;
  std::vector<int> children;
};

}  // namespace

double best_grid_path_value(int n, int horizon, const DiscountSchedule& d, const UtilitySpec& u,
                            int resolution) {
  require(n >= 2 && n <= 6, ErrorCode::SizeLimit, "grid path search is limited to n <= 6");
  require(horizon >= 1 && horizon <= 5, ErrorCode::SizeLimit,
          "grid path search is limited to horizon <= 5");
  require(resolution >= 1 && resolution <= 8, ErrorCode::SizeLimit,
          "grid path search is limited to resolution <= 8");
  require(d.horizon() == horizon, ErrorCode::InvalidSchedule,
          "schedule length differs from the horizon");

  std::vector<std::vector<GridState>> layers(horizon);
  layers[0].push_back(GridState{Graph::empty(n), 0.0, {}});
  for (int t = 0; t + 1 < horizon; ++t) {
    std::vector<GridState>& layer = layers[t];
    std::vector<std::vector<std::pair<std::string, Graph>>> expansions(layer.size());
    detail::parallel_for(layer.size(), [&](std::size_t s) {
      for (Graph& succ : weighted_successors_grid(layer[s].rep, resolution))
        expansions[s].emplace_back(weighted_key(succ), std::move(succ));
    });
    std::vector<GridState>& next = layers[t + 1];
    std::unordered_map<std::string, int> index;
    for (std::size_t s = 0; s < layer.size(); ++s)
      for (auto& [key, graph] : expansions[s]) {
        auto [it, inserted] = index.emplace(key, static_cast<int>(next.size()));
        if (inserted) next.push_back(GridState{std::move(graph), 0.0, {}});
        std::vector<int>& children = layer[s].children;
        if (std::find(children.begin(), children.end(), it->second) == children.end())
          children.push_back(it->second);
      }
    detail::parallel_for(next.size(),
                         [&](std::size_t s) { next[s].utility = evaluate_utility(next[s].rep, u); });
  }

  // Terminal expansion valued on the fly: deduplication buys nothing past the
  // final period.
  std::vector<double> value_to_go(layers[horizon - 1].size());
  detail::parallel_for(layers[horizon - 1].size(), [&](std::size_t s) {
    double best = 0.0;
    bool first = true;
    for (const Graph& succ : weighted_successors_grid(layers[horizon - 1][s].rep, resolution)) {
      const double v = d.weights[horizon - 1] * evaluate_utility(succ, u);
      if (first || v > best) {
        best = v;
        first = false;
      }
    }
    value_to_go[s] = best;
  });
  for (int t = horizon - 2; t >= 0; --t) {
    std::vector<double> value(layers[t].size());
    for (std::size_t s = 0; s < layers[t].size(); ++s) {
      double best = 0.0;
      bool first = true;
      for (int c : layers[t][s].children) {
        const double v =
            d.weights[t] * layers[t + 1][static_cast<std::size_t>(c)].utility + value_to_go[c];
        if (first || v > best) {
          best = v;
          first = false;
        }
      }
      value[s] = best;
    }
    value_to_go = std::move(value);
  }
  return value_to_go[0];
}

}  // namespace seqnet
