#pragma once

#include <functional>
#include <string>
#include <vector>

#include "seqnet/graph.hpp"

namespace seqnet {

/// Best-response map a_i = psi(sum_j g_ij a_j). Must be strictly increasing
/// and weakly convex with derivative in [0,1) on the range the iterates
/// reach; both properties are validated numerically rather than trusted.
class ResponseFunction {
 public:
  static ResponseFunction linear(double intercept, double slope);
  static ResponseFunction quadratic(double a, double b, double c);
  static ResponseFunction custom(std::function<double(double)> fn);

  double operator()(double x) const { return fn_(x); }
  double derivative(double x) const;

  /// Rejects responses that are non-increasing, concave, or steeper than
  /// slope 1 anywhere on [0, hi].
  void validate_on(double hi) const;

  const std::string& label() const { return label_; }

 private:
  ResponseFunction(std::function<double(double)> fn, std::function<double(double)> deriv,
                   std::string label)
      : fn_(std::move(fn)), deriv_(std::move(deriv)), label_(std::move(label)) {}

  std::function<double(double)> fn_;
  std::function<double(double)> deriv_;  // empty for custom: numeric fallback
  std::string label_;
};

/// Monotone fixed-point trace from the zero profile. Iterates are retained up
/// to trace_cap entries; the converged action profile is always kept.
struct EquilibriumTrace {
  std::vector<std::vector<double>> iterates;
  std::vector<double> actions;
  bool converged = false;
  double residual = 0.0;
  int iterations = 0;
};

EquilibriumTrace solve_equilibrium(const Graph& g, const ResponseFunction& psi,
                                   double tol = 1e-12, int max_iter = 100000,
                                   int trace_cap = 64);

/// Sum of the m-th fixed-point iterate started from zero.
double iterate_sums(const Graph& g, const ResponseFunction& psi, int m);

enum class WelfareTransform { Identity, Square, ExpMinusOne };

double apply_transform(WelfareTransform t, double x);

/// Sum of a convex increasing transform over the action profile.
double planner_welfare(const std::vector<double>& actions, WelfareTransform transform);

}  // namespace seqnet
