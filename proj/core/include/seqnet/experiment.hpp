#pragma once

#include <optional>
#include <string>
#include <vector>

#include "seqnet/planner.hpp"
#include "seqnet/weighted.hpp"

namespace seqnet {

enum class RunMode { Greedy, Optimal, Delegate, WeightedStep };

/// Parsed experiment description: flat key = value lines under typed
/// sections ([experiment], [utility], [discount], [delegate], [weighted]).
/// Unknown sections or keys are rejected with the offending line number.
struct ExperimentConfig {
  RunMode mode = RunMode::Greedy;
  int nodes = 0;
  int horizon = 0;
  unsigned seed = 0;
  std::string out_dir = ".";
  bool restrict_nsg = false;

  UtilitySpec utility = UtilitySpec::kb_squared(0.01);
  std::string discount_spec = "farsighted";

  std::vector<int> agents;  // 0-based; empty means derive from the greedy path
  double phi_agent = 0.01;
  int resolution = 8;

  static ExperimentConfig parse(const std::string& text, const std::string& source);
  static ExperimentConfig parse_file(const std::string& path);

  DiscountSchedule discount(int horizon) const;
};

/// Builds a schedule from a spec string: farsighted | geometric:d | myopic:e
/// | file:PATH (whitespace-separated weights).
DiscountSchedule parse_discount(const std::string& spec, int horizon);

UtilitySpec parse_utility(const std::string& kind, double phi, int rounds,
                          const std::vector<double>& coeffs);

struct PeriodReport {
  int period = 0;
  int links = 0;
  double utility = 0.0;
  bool nsg = false;
  bool qc = false;
};

struct RunReport {
  std::string mode;
  int nodes = 0;
  int horizon = 0;
  unsigned seed = 0;
  double value = 0.0;
  std::string final_class;
  std::vector<PeriodReport> periods;
  FormationPath path;

  std::string csv() const;
  std::string json() const;
};

/// Dispatches to the requested planner, writes one DOT per period, the
/// per-period utility CSV, and the JSON summary into out_dir, and returns
/// the report. Outputs are deterministic: re-running a config reproduces
/// byte-identical files.
RunReport run_config(const ExperimentConfig& config);

/// Structural label of a graph: QC, QS, NSG, non-NSG (or the weighted
/// variants).
std::string classify_graph(const Graph& g);

struct Table2Row {
  std::string label;
  double value = 0.0;
  double expected = 0.0;
  bool maximizer = false;
};

struct Table2Report {
  std::vector<Table2Row> rows;
  double tolerance = 0.0;
  bool pass = false;

  std::string csv() const;
};

/// Recomputes the four-way NSG comparison at n = 7, t = 8, phi = 0.01 and
/// checks it against the reference values (7.3370, 7.3374, 7.3368, 7.3362),
/// flagging the maximizer.
Table2Report run_table2(double tolerance = 5e-5);

}  // namespace seqnet
