#include "seqnet/graph.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <sstream>

namespace seqnet {

namespace {

constexpr double kSnapTol = 1e-12;
constexpr int kCanonicalSizeCap = 10;

double snap_weight(double w) {
  if (std::abs(w) <= kSnapTol) return 0.0;
  if (std::abs(w - 1.0) <= kSnapTol) return 1.0;
  return w;
}

void check_node(const Graph& g, int i) {
  require(i >= 0 && i < g.size(), ErrorCode::InvalidEdit, "node index out of range");
}

}  // namespace

Graph Graph::empty(int n) {
  require(n >= 1, ErrorCode::InvalidSize, "graph needs at least one node");
  return Graph(n, std::vector<double>(static_cast<std::size_t>(n) * n, 0.0));
}

Graph Graph::from_links(int n, const std::vector<std::pair<int, int>>& links) {
  Graph g = empty(n);
  for (const auto& [i, j] : links) g = g.with_link(LinkEdit(i, j));
  return g;
}

Graph Graph::from_matrix(int n, const std::vector<double>& weights) {
  require(n >= 1, ErrorCode::InvalidSize, "graph needs at least one node");
  require(weights.size() == static_cast<std::size_t>(n) * n, ErrorCode::InvalidInput,
          "matrix size mismatch");
  std::vector<double> w(weights);
  for (int i = 0; i < n; ++i) {
    require(std::abs(w[static_cast<std::size_t>(i) * n + i]) <= kSnapTol, ErrorCode::InvalidInput,
            "nonzero diagonal entry");
    w[static_cast<std::size_t>(i) * n + i] = 0.0;
    for (int j = i + 1; j < n; ++j) {
      const double a = w[static_cast<std::size_t>(i) * n + j];
      const double b = w[static_cast<std::size_t>(j) * n + i];
      require(std::abs(a - b) <= 1e-9, ErrorCode::InvalidInput, "matrix not symmetric");
      double v = snap_weight(a);
      require(v >= 0.0 && v <= 1.0, ErrorCode::InvalidInput, "weight outside [0,1]");
      w[static_cast<std::size_t>(i) * n + j] = v;
      w[static_cast<std::size_t>(j) * n + i] = v;
    }
  }
  return Graph(n, std::move(w));
}

bool Graph::unweighted() const {
  for (double v : w_)
    if (v != 0.0 && v != 1.0) return false;
  return true;
}

int Graph::link_count() const {
  int count = 0;
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if (linked(i, j)) ++count;
  return count;
}

double Graph::total_weight() const {
  double total = 0.0;
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j) total += weight(i, j);
  return total;
}

int Graph::degree(int i) const {
  check_node(*this, i);
  int d = 0;
  for (int j = 0; j < n_; ++j)
    if (linked(i, j)) ++d;
  return d;
}

double Graph::strength(int i) const {
  check_node(*this, i);
  double s = 0.0;
  for (int j = 0; j < n_; ++j) s += weight(i, j);
  return s;
}

std::vector<int> Graph::neighbors(int i) const {
  check_node(*this, i);
  std::vector<int> out;
  for (int j = 0; j < n_; ++j)
    if (linked(i, j)) out.push_back(j);
  return out;
}

std::vector<int> Graph::degrees() const {
  std::vector<int> out(n_);
  for (int i = 0; i < n_; ++i) out[i] = degree(i);
  return out;
}

Graph Graph::with_link(const LinkEdit& e) const {
  check_node(*this, e.i);
  check_node(*this, e.j);
  require(weight(e.i, e.j) == 0.0, ErrorCode::OccupiedLink, "pair already linked");
  return with_pair_weight(e.i, e.j, 1.0);
}

Graph Graph::with_pair_weight(int i, int j, double w) const {
  check_node(*this, i);
  check_node(*this, j);
  require(i != j, ErrorCode::InvalidEdit, "cannot weight the diagonal");
  w = snap_weight(w);
  require(w >= 0.0 && w <= 1.0, ErrorCode::InvalidWeights, "weight outside [0,1]");
  std::vector<double> next(w_);
  next[static_cast<std::size_t>(i) * n_ + j] = w;
  next[static_cast<std::size_t>(j) * n_ + i] = w;
  return Graph(n_, std::move(next));
}

bool graphs_equal(const Graph& a, const Graph& b, double tol) {
  if (a.size() != b.size()) return false;
  for (std::size_t k = 0; k < a.data().size(); ++k)
    if (std::abs(a.data()[k] - b.data()[k]) > tol) return false;
  return true;
}

Graph add_link(const Graph& g, const LinkEdit& e) {
  require(g.unweighted(), ErrorCode::InvalidInput, "add_link requires an unweighted graph");
  return g.with_link(e);
}

std::vector<Graph> successors(const Graph& g) {
  require(g.unweighted(), ErrorCode::InvalidInput, "successors requires an unweighted graph");
  std::vector<Graph> out;
  for (int i = 0; i < g.size(); ++i)
    for (int j = i + 1; j < g.size(); ++j)
      if (!g.linked(i, j)) out.push_back(g.with_link(LinkEdit(i, j)));
  return out;
}

namespace {

// Lexicographically minimizes the upper-triangle bit-string over all
// permutations that list nodes in descending degree order. The constraint set
// is itself permutation-invariant, so the minimum is a canonical invariant,
// and any achieved minimum pins a concrete adjacency matrix, which makes the
// key exact: equal keys imply isomorphism.
class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g) : g_(g), n_(g.size()) {
    const std::vector<int> deg = g.degrees();
    std::vector<int> order(n_);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return deg[a] > deg[b]; });
    // Slot s may only take nodes from the degree class assigned to s.
    class_of_slot_.resize(n_);
    int cls = 0;
    for (int s = 0; s < n_; ++s) {
      if (s > 0 && deg[order[s]] != deg[order[s - 1]]) ++cls;
      class_of_slot_[s] = cls;
      classes_.resize(cls + 1);
      classes_[cls].push_back(order[s]);
    }
    placed_.assign(n_, -1);
    used_.assign(n_, false);
    bits_.reserve(static_cast<std::size_t>(n_) * (n_ - 1) / 2);
    best_.assign(static_cast<std::size_t>(n_) * (n_ - 1) / 2, 2);
    descend(0);
  }

  std::string key() const {
    std::string out;
    out.push_back(static_cast<char>(n_));
    unsigned char acc = 0;
    int filled = 0;
    for (unsigned char bit : best_) {
      acc = static_cast<unsigned char>((acc << 1) | bit);
      if (++filled == 8) {
        out.push_back(static_cast<char>(acc));
        acc = 0;
        filled = 0;
      }
    }
    if (filled > 0) out.push_back(static_cast<char>(acc << (8 - filled)));
    return out;
  }

 private:
  void descend(int slot) {
    if (slot == n_) {
      if (bits_ < best_) best_ = bits_;
      return;
    }
    for (int node : classes_[class_of_slot_[slot]]) {
      if (used_[node]) continue;
      const std::size_t mark = bits_.size();
      bool worse = false;
      for (int prev = 0; prev < slot; ++prev) {
        const unsigned char bit = g_.linked(placed_[prev], node) ? 1 : 0;
        if (bit > best_[bits_.size()]) {
          worse = true;
          break;
        }
        bits_.push_back(bit);
        if (bit < best_[bits_.size() - 1]) {
          // Strictly better prefix: everything deeper restarts the record.
          std::fill(best_.begin() + static_cast<std::ptrdiff_t>(bits_.size() - 1), best_.end(),
                    static_cast<unsigned char>(2));
        }
      }
      if (!worse) {
        placed_[slot] = node;
        used_[node] = true;
        descend(slot + 1);
        used_[node] = false;
      }
      bits_.resize(mark);
    }
  }

  const Graph& g_;
  int n_;
  std::vector<int> class_of_slot_;
  std::vector<std::vector<int>> classes_;
  std::vector<int> placed_;
  std::vector<bool> used_;
  std::vector<unsigned char> bits_;
  std::vector<unsigned char> best_;
};

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
  require(g.unweighted(), ErrorCode::InvalidInput, "canonical form requires an unweighted graph");
  require(g.size() <= kCanonicalSizeCap, ErrorCode::SizeLimit,
          "exact canonicalization is limited to n <= 10");
  return CanonicalForm{CanonicalSearch(g).key()};
}

bool isomorphic(const Graph& a, const Graph& b) {
  require(a.size() == b.size(), ErrorCode::InvalidComparison, "node counts differ");
  require(a.unweighted() && b.unweighted(), ErrorCode::InvalidInput,
          "isomorphism test requires unweighted graphs");
  return canonical_form(a) == canonical_form(b);
}

namespace {

std::string format_weight(double w) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", w);
  return buf;
}

}  // namespace

std::string to_dot(const Graph& g) {
  std::ostringstream out;
  out << "graph G {\n";
  for (int i = 0; i < g.size(); ++i) out << "  " << (i + 1) << ";\n";
  for (int i = 0; i < g.size(); ++i)
    for (int j = i + 1; j < g.size(); ++j) {
      const double w = g.weight(i, j);
      if (w == 0.0) continue;
      out << "  " << (i + 1) << " -- " << (j + 1);
      if (w != 1.0) out << " [weight=" << format_weight(w) << "]";
      out << ";\n";
    }
  out << "}\n";
  return out.str();
}

Graph from_dot(const std::string& text) {
  struct Edge {
    int i, j;
    double w;
  };
  std::vector<Edge> edges;
  int max_node = 0;
  std::istringstream in(text);
  std::string line;
  bool saw_header = false;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    line = line.substr(first);
    if (line.rfind("graph", 0) == 0) {
      saw_header = true;
      continue;
    }
    if (line.rfind('}', 0) == 0) break;
    if (!line.empty() && line.back() == ';') line.pop_back();
    int i = 0, j = 0;
    double w = 1.0;
    char attr[64] = {0};
    if (std::sscanf(line.c_str(), "%d -- %d [weight=%63[^]]]", &i, &j, attr) == 3) {
      w = std::strtod(attr, nullptr);
    } else if (std::sscanf(line.c_str(), "%d -- %d", &i, &j) == 2) {
      w = 1.0;
    } else if (std::sscanf(line.c_str(), "%d", &i) == 1) {
      max_node = std::max(max_node, i);
      continue;
    } else {
      fail(ErrorCode::InvalidInput, "unrecognized DOT line: " + line);
    }
    require(i >= 1 && j >= 1, ErrorCode::InvalidInput, "DOT node ids are 1-based");
    max_node = std::max({max_node, i, j});
    edges.push_back({i - 1, j - 1, w});
  }
  require(saw_header && max_node >= 1, ErrorCode::InvalidInput, "not a DOT graph");
  Graph g = Graph::empty(max_node);
  for (const Edge& e : edges) g = g.with_pair_weight(e.i, e.j, e.w);
  return g;
}

std::string to_matrix_text(const Graph& g) {
  std::ostringstream out;
  out << g.size() << "\n";
  for (int i = 0; i < g.size(); ++i) {
    for (int j = 0; j < g.size(); ++j) {
      if (j > 0) out << ' ';
      const double w = g.weight(i, j);
      if (w == 0.0)
        out << '0';
      else if (w == 1.0)
        out << '1';
      else
        out << format_weight(w);
    }
    out << "\n";
  }
  return out.str();
}

Graph from_matrix_text(const std::string& text) {
  std::istringstream in(text);
  int n = 0;
  require(static_cast<bool>(in >> n), ErrorCode::InvalidInput, "missing node count");
  require(n >= 1, ErrorCode::InvalidSize, "node count must be positive");
  std::vector<double> w(static_cast<std::size_t>(n) * n);
  for (double& v : w)
    require(static_cast<bool>(in >> v), ErrorCode::InvalidInput, "truncated matrix");
  return Graph::from_matrix(n, w);
}

}  // namespace seqnet
