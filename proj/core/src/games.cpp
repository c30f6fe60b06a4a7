#include "seqnet/games.hpp"

#include <algorithm>
#include <cmath>

#include "seqnet/metrics.hpp"

namespace seqnet {

namespace {

constexpr double kValidationSlack = 1e-9;
constexpr int kValidationGrid = 129;

std::vector<double> neighbor_sums(const Graph& g, const std::vector<double>& a) {
  const int n = g.size();
  std::vector<double> out(n, 0.0);
  for (int i = 0; i < n; ++i) {
    double acc = 0.0;
    for (int j = 0; j < n; ++j) acc += g.weight(i, j) * a[j];
    out[i] = acc;
  }
  return out;
}

}  // namespace

ResponseFunction ResponseFunction::linear(double intercept, double slope) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "linear:%g,%g", intercept, slope);
  return ResponseFunction([=](double x) { return intercept + slope * x; },
                          [=](double) { return slope; }, buf);
}

ResponseFunction ResponseFunction::quadratic(double a, double b, double c) {
  char buf[96];
  std::snprintf(buf, sizeof(buf), "quad:%g,%g,%g", a, b, c);
  return ResponseFunction([=](double x) { return a + b * x + c * x * x; },
                          [=](double x) { return b + 2.0 * c * x; }, buf);
}

ResponseFunction ResponseFunction::custom(std::function<double(double)> fn) {
  return ResponseFunction(std::move(fn), {}, "custom");
}

double ResponseFunction::derivative(double x) const {
  if (deriv_) return deriv_(x);
  const double h = std::max(1e-7, std::abs(x) * 1e-7);
  return (fn_(x + h) - fn_(x - h)) / (2.0 * h);
}

void ResponseFunction::validate_on(double hi) const {
  hi = std::max(hi, 1.0);
  const double step = hi / (kValidationGrid - 1);
  double prev_value = fn_(0.0);
  double prev_slope = derivative(0.0);
  require(prev_value >= 0.0, ErrorCode::InvalidParameter, "response must be non-negative at 0");
  for (int k = 1; k < kValidationGrid; ++k) {
    const double x = k * step;
    const double value = fn_(x);
    const double slope = derivative(x);
    require(value > prev_value - kValidationSlack, ErrorCode::InvalidParameter,
            "response function is not increasing");
    require(slope >= prev_slope - kValidationSlack, ErrorCode::InvalidParameter,
            "response function is not convex");
    require(slope >= -kValidationSlack && slope < 1.0 + kValidationSlack,
            ErrorCode::InvalidParameter, "response slope outside [0,1)");
    prev_value = value;
    prev_slope = slope;
  }
}

EquilibriumTrace solve_equilibrium(const Graph& g, const ResponseFunction& psi, double tol,
                                   int max_iter, int trace_cap) {
  require(tol > 0.0, ErrorCode::InvalidParameter, "tolerance must be positive");
  const int n = g.size();
  EquilibriumTrace trace;
  std::vector<double> a(n, 0.0);
  trace.iterates.push_back(a);
  double max_sum = 0.0;
  const double divergence_guard = 1e12;
  for (int it = 1; it <= max_iter; ++it) {
    const std::vector<double> sums = neighbor_sums(g, a);
    std::vector<double> next(n);
    double step = 0.0;
    for (int i = 0; i < n; ++i) {
      max_sum = std::max(max_sum, sums[i]);
      next[i] = psi(sums[i]);
      step = std::max(step, std::abs(next[i] - a[i]));
      require(next[i] >= a[i] - 1e-12, ErrorCode::InvariantViolation,
              "fixed-point iterates must be monotone from zero");
      require(next[i] < divergence_guard, ErrorCode::Divergence,
              "iterates grew without bound");
    }
    a = std::move(next);
    if (static_cast<int>(trace.iterates.size()) < trace_cap) trace.iterates.push_back(a);
    trace.iterations = it;
    if (step < tol) {
      trace.converged = true;
      trace.residual = step;
      break;
    }
  }
  require(trace.converged, ErrorCode::ConvergenceFailure,
          "equilibrium iteration hit the iteration cap");
  trace.actions = a;

  // Post-hoc contraction and shape checks at the tightest available bound:
  // the largest aggregate actually reached.
  psi.validate_on(max_sum);
  const double radius = spectral_radius(g);
  if (radius > 0.0)
    require(psi.derivative(max_sum) < 1.0 / radius, ErrorCode::Divergence,
            "response slope reaches 1/lambda_max on the iterate range");
  return trace;
}

double iterate_sums(const Graph& g, const ResponseFunction& psi, int m) {
  require(m >= 0, ErrorCode::InvalidParameter, "iteration count must be non-negative");
  const int n = g.size();
  std::vector<double> a(n, 0.0);
  double max_sum = 0.0;
  for (int it = 0; it < m; ++it) {
    const std::vector<double> sums = neighbor_sums(g, a);
    for (int i = 0; i < n; ++i) {
      max_sum = std::max(max_sum, sums[i]);
      a[i] = psi(sums[i]);
    }
  }
  psi.validate_on(max_sum);
  double total = 0.0;
  for (double x : a) total += x;
  return total;
}

double apply_transform(WelfareTransform t, double x) {
  switch (t) {
    case WelfareTransform::Identity: return x;
    case WelfareTransform::Square: return x * x;
    case WelfareTransform::ExpMinusOne: return std::expm1(x);
  }
  return x;
}

double planner_welfare(const std::vector<double>& actions, WelfareTransform transform) {
  double total = 0.0;
  for (double a : actions) total += apply_transform(transform, a);
  return total;
}

}  // namespace seqnet
