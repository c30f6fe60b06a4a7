#include "seqnet/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace seqnet {

namespace {

constexpr double kResidualTol = 1e-10;
constexpr double kPowerTol = 1e-10;
constexpr long kPowerIterationCap = 1000000;
constexpr double kCompareRelTol = 1e-12;

std::vector<double> mat_vec(const Graph& g, const std::vector<double>& v) {
  const int n = g.size();
  std::vector<double> out(n, 0.0);
  for (int i = 0; i < n; ++i) {
    double acc = 0.0;
    for (int j = 0; j < n; ++j) acc += g.weight(i, j) * v[j];
    out[i] = acc;
  }
  return out;
}

double vec_sum(const std::vector<double>& v) {
  double acc = 0.0;
  for (double x : v) acc += x;
  return acc;
}

// a > b up to relative noise.
bool definitely_greater(double a, double b) {
  return a - b > kCompareRelTol * std::max({1.0, std::abs(a), std::abs(b)});
}

}  // namespace

NodeWeights::NodeWeights(std::vector<double> values) : theta(std::move(values)) {
  for (double v : theta)
    require(v >= 0.0, ErrorCode::InvalidWeights, "node weights must be non-negative");
}

NodeWeights NodeWeights::ones(int n) { return NodeWeights(std::vector<double>(n, 1.0)); }

double walk_count(const Graph& g, int k) {
  require(k >= 0, ErrorCode::InvalidParameter, "walk length must be non-negative");
  std::vector<double> v(g.size(), 1.0);
  for (int step = 0; step < k; ++step) v = mat_vec(g, v);
  return vec_sum(v);
}

double walk_count_weighted(const Graph& g, int k, const NodeWeights& theta) {
  require(k >= 0, ErrorCode::InvalidParameter, "walk length must be non-negative");
  require(theta.size() == g.size(), ErrorCode::InvalidWeights, "weight vector length mismatch");
  std::vector<double> v = theta.theta;
  for (int step = 0; step < k; ++step) v = mat_vec(g, v);
  return vec_sum(v);
}

WalkProfile walk_profile(const Graph& g, int k_max) {
  return walk_profile_weighted(g, k_max, NodeWeights::ones(g.size()));
}

WalkProfile walk_profile_weighted(const Graph& g, int k_max, const NodeWeights& theta) {
  require(k_max >= 0, ErrorCode::InvalidParameter, "profile depth must be non-negative");
  require(theta.size() == g.size(), ErrorCode::InvalidWeights, "weight vector length mismatch");
  WalkProfile profile;
  profile.counts.reserve(k_max + 1);
  std::vector<double> v = theta.theta;
  profile.counts.push_back(vec_sum(v));
  for (int k = 1; k <= k_max; ++k) {
    v = mat_vec(g, v);
    profile.counts.push_back(vec_sum(v));
  }
  return profile;
}

std::string walk_profile_csv(const WalkProfile& profile) {
  std::ostringstream out;
  out << "k,count\n";
  char buf[40];
  for (std::size_t k = 0; k < profile.counts.size(); ++k) {
    std::snprintf(buf, sizeof(buf), "%.12g", profile.counts[k]);
    out << k << ',' << buf << "\n";
  }
  return out.str();
}

double CentralityVector::aggregate() const { return vec_sum(values); }

double CentralityVector::aggregate_squared() const {
  double acc = 0.0;
  for (double v : values) acc += v * v;
  return acc;
}

std::string centrality_csv(const CentralityVector& c) {
  std::ostringstream out;
  out << "node,value\n";
  char buf[40];
  for (std::size_t i = 0; i < c.values.size(); ++i) {
    std::snprintf(buf, sizeof(buf), "%.12g", c.values[i]);
    out << (i + 1) << ',' << buf << "\n";
  }
  return out.str();
}

std::vector<double> kb_solve(const Graph& g, double phi, const std::vector<double>& rhs) {
  require(phi >= 0.0, ErrorCode::InvalidParameter, "decay must be non-negative");
  require(rhs.size() == static_cast<std::size_t>(g.size()), ErrorCode::InvalidWeights,
          "right-hand side length mismatch");
  const double radius = spectral_radius(g);
  require(radius == 0.0 || phi < 1.0 / radius, ErrorCode::Divergence,
          "decay at or beyond 1/lambda_max");
  const int n = g.size();

  // Dense LU with partial pivoting on A = I - phi*G. The matrices here stay
  // tiny (n <= ~30), so a direct textbook solve beats pulling in a dependency.
  std::vector<double> a(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      a[static_cast<std::size_t>(i) * n + j] = (i == j ? 1.0 : 0.0) - phi * g.weight(i, j);
  std::vector<double> x = rhs;
  std::vector<int> piv(n);
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    for (int r = col + 1; r < n; ++r)
      if (std::abs(a[static_cast<std::size_t>(r) * n + col]) >
          std::abs(a[static_cast<std::size_t>(pivot) * n + col]))
        pivot = r;
    piv[col] = pivot;
    if (pivot != col) {
      for (int j = 0; j < n; ++j)
        std::swap(a[static_cast<std::size_t>(col) * n + j],
                  a[static_cast<std::size_t>(pivot) * n + j]);
      std::swap(x[col], x[pivot]);
    }
    const double d = a[static_cast<std::size_t>(col) * n + col];
    require(d != 0.0, ErrorCode::Divergence, "singular system in centrality solve");
    for (int r = col + 1; r < n; ++r) {
      const double f = a[static_cast<std::size_t>(r) * n + col] / d;
      if (f == 0.0) continue;
      a[static_cast<std::size_t>(r) * n + col] = 0.0;
      for (int j = col + 1; j < n; ++j)
        a[static_cast<std::size_t>(r) * n + j] -= f * a[static_cast<std::size_t>(col) * n + j];
      x[r] -= f * x[col];
    }
  }
  for (int i = n - 1; i >= 0; --i) {
    double acc = x[i];
    for (int j = i + 1; j < n; ++j) acc -= a[static_cast<std::size_t>(i) * n + j] * x[j];
    x[i] = acc / a[static_cast<std::size_t>(i) * n + i];
  }

  // Residual check against the original system.
  double residual = 0.0;
  for (int i = 0; i < n; ++i) {
    double acc = x[i];
    for (int j = 0; j < n; ++j) acc -= phi * g.weight(i, j) * x[j];
    residual = std::max(residual, std::abs(acc - rhs[i]));
  }
  require(residual <= kResidualTol, ErrorCode::ConvergenceFailure,
          "centrality solve residual above tolerance");
  return x;
}

CentralityVector katz_bonacich(const Graph& g, double phi) {
  CentralityVector out;
  out.values = kb_solve(g, phi, std::vector<double>(g.size(), 1.0));
  out.decay = phi;
  out.kind = CentralityKind::KatzBonacich;
  return out;
}

double aggregate_kb(const Graph& g, double phi) { return katz_bonacich(g, phi).aggregate(); }

double aggregate_kb_squared(const Graph& g, double phi) {
  return katz_bonacich(g, phi).aggregate_squared();
}

CentralityVector diffusion_centrality(const Graph& g, double phi, int rounds) {
  require(phi >= 0.0 && phi <= 1.0, ErrorCode::InvalidParameter, "diffusion decay outside [0,1]");
  require(rounds >= 0, ErrorCode::InvalidParameter, "diffusion rounds must be non-negative");
  const int n = g.size();
  CentralityVector out;
  out.values.assign(n, 1.0);  // k = 0 term
  out.decay = phi;
  out.rounds = rounds;
  out.kind = CentralityKind::Diffusion;
  std::vector<double> v(n, 1.0);
  double scale = 1.0;
  for (int k = 1; k <= rounds; ++k) {
    v = mat_vec(g, v);
    scale *= phi;
    for (int i = 0; i < n; ++i) out.values[i] += scale * v[i];
  }
  return out;
}

double aggregate_diffusion(const Graph& g, double phi, int rounds) {
  return diffusion_centrality(g, phi, rounds).aggregate();
}

double spectral_radius(const Graph& g) {
  const int n = g.size();
  double shift = 0.0;
  for (int i = 0; i < n; ++i) shift = std::max(shift, g.strength(i));
  if (shift == 0.0) return 0.0;

  std::vector<double> v(n, 1.0 / std::sqrt(static_cast<double>(n)));
  for (long it = 0; it < kPowerIterationCap; ++it) {
    std::vector<double> gv = mat_vec(g, v);
    double rayleigh = 0.0;
    for (int i = 0; i < n; ++i) rayleigh += v[i] * gv[i];
    // For symmetric G the eigenvalue error is bounded by this residual norm.
    double residual = 0.0;
    for (int i = 0; i < n; ++i) {
      const double r = gv[i] - rayleigh * v[i];
      residual += r * r;
    }
    if (std::sqrt(residual) <= kPowerTol) return rayleigh;
    for (int i = 0; i < n; ++i) gv[i] += shift * v[i];
    double norm = 0.0;
    for (double x : gv) norm += x * x;
    norm = std::sqrt(norm);
    if (norm == 0.0) return 0.0;
    for (double& x : gv) x /= norm;
    v = std::move(gv);
  }
  fail(ErrorCode::ConvergenceFailure, "power iteration did not converge");
}

const char* to_string(Dominance d) {
  switch (d) {
    case Dominance::StrictlyDominates: return "strictly-dominates";
    case Dominance::DominatedStrictly: return "dominated-strictly";
    case Dominance::Equal: return "equal";
    case Dominance::Incomparable: return "incomparable";
  }
  return "unknown";
}

DominanceVerdict compare_walk_profiles(const Graph& g, const Graph& h, int k_from, int k_max,
                                       const std::optional<NodeWeights>& theta) {
  require(g.size() == h.size(), ErrorCode::InvalidComparison, "node counts differ");
  require(k_from >= 0 && k_max >= k_from, ErrorCode::InvalidParameter, "bad length range");
  // Unweighted counts are exact integers (doubles stay below 2^53 at desk
  // scale), so they compare exactly; weighted counts get a relative guard.
  const bool exact = !theta.has_value() && g.unweighted() && h.unweighted();
  const NodeWeights w = theta.value_or(NodeWeights::ones(g.size()));
  std::vector<double> a = w.theta;
  std::vector<double> b = w.theta;
  bool g_wins = false;
  bool h_wins = false;
  for (int k = 0; k <= k_max; ++k) {
    if (k > 0) {
      a = mat_vec(g, a);
      b = mat_vec(h, b);
    }
    if (k < k_from) continue;
    const double cg = vec_sum(a);
    const double ch = vec_sum(b);
    if (exact ? cg > ch : definitely_greater(cg, ch)) g_wins = true;
    if (exact ? ch > cg : definitely_greater(ch, cg)) h_wins = true;
  }
  DominanceVerdict out;
  out.k_checked = k_max;
  if (g_wins && h_wins)
    out.verdict = Dominance::Incomparable;
  else if (g_wins)
    out.verdict = Dominance::StrictlyDominates;
  else if (h_wins)
    out.verdict = Dominance::DominatedStrictly;
  else
    out.verdict = Dominance::Equal;
  return out;
}

DominanceVerdict walk_dominates(const Graph& g, const Graph& h, int k_max) {
  if (k_max < 0) k_max = 2 * g.size();
  return compare_walk_profiles(g, h, 0, k_max, std::nullopt);
}

}  // namespace seqnet
