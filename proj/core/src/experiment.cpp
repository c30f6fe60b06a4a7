#include "seqnet/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "seqnet/structures.hpp"

#include <json.hpp>

namespace seqnet {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<double> parse_number_list(const std::string& text, int line) {
  std::vector<double> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    try {
      out.push_back(std::stod(trim(item)));
    } catch (const std::exception&) {
      fail(ErrorCode::InvalidConfig, "line " + std::to_string(line) + ": bad number '" + item + "'");
    }
  }
  return out;
}

double parse_number(const std::string& text, int line) {
  try {
    std::size_t used = 0;
    const double v = std::stod(trim(text), &used);
    if (used == trim(text).size()) return v;
  } catch (const std::exception&) {
  }
  fail(ErrorCode::InvalidConfig, "line " + std::to_string(line) + ": bad number '" + text + "'");
}

int parse_int(const std::string& text, int line) {
  const double v = parse_number(text, line);
  require(v == std::floor(v), ErrorCode::InvalidConfig,
          "line " + std::to_string(line) + ": expected an integer");
  return static_cast<int>(v);
}

bool parse_bool(const std::string& text, int line) {
  const std::string t = trim(text);
  if (t == "true" || t == "1" || t == "yes") return true;
  if (t == "false" || t == "0" || t == "no") return false;
  fail(ErrorCode::InvalidConfig, "line " + std::to_string(line) + ": expected a boolean");
}

std::string format_num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

}  // namespace

UtilitySpec parse_utility(const std::string& kind, double phi, int rounds,
                          const std::vector<double>& coeffs) {
  if (kind == "kb") return UtilitySpec::kb(phi);
  if (kind == "kb2") return UtilitySpec::kb_squared(phi);
  if (kind == "diffusion") return UtilitySpec::diffusion(phi, rounds);
  if (kind == "spectral") return UtilitySpec::spectral();
  if (kind == "walks") {
    require(!coeffs.empty(), ErrorCode::InvalidConfig, "walk utility needs coefficients");
    return UtilitySpec::walks(coeffs);
  }
  fail(ErrorCode::InvalidConfig, "unknown utility kind '" + kind + "'");
}

DiscountSchedule parse_discount(const std::string& spec, int horizon) {
  if (spec == "farsighted") return discount_farsighted(horizon);
  if (spec.rfind("geometric:", 0) == 0)
    return discount_geometric(std::stod(spec.substr(10)), horizon);
  if (spec == "myopic") return discount_myopic(1e-4, horizon);
  if (spec.rfind("myopic:", 0) == 0) return discount_myopic(std::stod(spec.substr(7)), horizon);
  if (spec.rfind("file:", 0) == 0) {
    std::ifstream in(spec.substr(5));
    require(static_cast<bool>(in), ErrorCode::InvalidConfig,
            "cannot open discount file " + spec.substr(5));
    DiscountSchedule d;
    double w = 0.0;
    while (in >> w) {
      require(w >= 0.0 && w <= 1.0, ErrorCode::InvalidConfig, "discount weight outside [0,1]");
      d.weights.push_back(w);
    }
    require(d.horizon() == horizon, ErrorCode::InvalidSchedule,
            "discount file length differs from the horizon");
    return d;
  }
  fail(ErrorCode::InvalidConfig, "unknown discount spec '" + spec + "'");
}

DiscountSchedule ExperimentConfig::discount(int h) const { return parse_discount(discount_spec, h); }

ExperimentConfig ExperimentConfig::parse(const std::string& text, const std::string& source) {
  ExperimentConfig cfg;
  std::string utility_kind = "kb2";
  double phi = 0.01;
  int rounds = 5;
  std::vector<double> coeffs;
  std::vector<double> theta;

  std::istringstream in(text);
  std::string raw;
  std::string section = "experiment";
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string s = raw;
    const auto hash = s.find('#');
    if (hash != std::string::npos) s = s.substr(0, hash);
    s = trim(s);
    if (s.empty()) continue;
    if (s.front() == '[') {
      require(s.back() == ']', ErrorCode::InvalidConfig,
              "line " + std::to_string(line) + ": unterminated section header");
      section = trim(s.substr(1, s.size() - 2));
      require(section == "experiment" || section == "utility" || section == "discount" ||
                  section == "delegate" || section == "weighted",
              ErrorCode::InvalidConfig,
              "line " + std::to_string(line) + ": unknown section [" + section + "]");
      continue;
    }
    const auto eq = s.find('=');
    require(eq != std::string::npos, ErrorCode::InvalidConfig,
            "line " + std::to_string(line) + ": expected key = value");
    const std::string key = trim(s.substr(0, eq));
    const std::string value = trim(s.substr(eq + 1));
    auto unknown = [&]() -> void {
      fail(ErrorCode::InvalidConfig, "line " + std::to_string(line) + ": unknown key '" + key +
                                         "' in section [" + section + "]");
    };
    if (section == "experiment") {
      if (key == "mode") {
        if (value == "greedy")
          cfg.mode = RunMode::Greedy;
        else if (value == "optimal")
          cfg.mode = RunMode::Optimal;
        else if (value == "delegate")
          cfg.mode = RunMode::Delegate;
        else if (value == "weighted-step")
          cfg.mode = RunMode::WeightedStep;
        else
          fail(ErrorCode::InvalidConfig,
               "line " + std::to_string(line) + ": unknown mode '" + value + "'");
      } else if (key == "nodes")
        cfg.nodes = parse_int(value, line);
      else if (key == "horizon")
        cfg.horizon = parse_int(value, line);
      else if (key == "seed")
        cfg.seed = static_cast<unsigned>(parse_int(value, line));
      else if (key == "out_dir")
        cfg.out_dir = value;
      else if (key == "restrict_nsg")
        cfg.restrict_nsg = parse_bool(value, line);
      else
        unknown();
    } else if (section == "utility") {
      if (key == "kind")
        utility_kind = value;
      else if (key == "phi")
        phi = parse_number(value, line);
      else if (key == "rounds")
        rounds = parse_int(value, line);
      else if (key == "coeffs")
        coeffs = parse_number_list(value, line);
      else if (key == "theta")
        theta = parse_number_list(value, line);
      else
        unknown();
    } else if (section == "discount") {
      if (key == "spec")
        cfg.discount_spec = value;
      else
        unknown();
    } else if (section == "delegate") {
      if (key == "agents") {
        cfg.agents.clear();
        for (double v : parse_number_list(value, line)) {
          require(v >= 1.0 && v == std::floor(v), ErrorCode::InvalidConfig,
                  "line " + std::to_string(line) + ": agents are 1-based node indices");
          cfg.agents.push_back(static_cast<int>(v) - 1);
        }
      } else if (key == "phi_agent")
        cfg.phi_agent = parse_number(value, line);
      else
        unknown();
    } else if (section == "weighted") {
      if (key == "resolution")
        cfg.resolution = parse_int(value, line);
      else
        unknown();
    }
  }
  require(cfg.nodes >= 1, ErrorCode::InvalidConfig, source + ": nodes must be set");
  require(cfg.horizon >= 1, ErrorCode::InvalidConfig, source + ": horizon must be set");
  try {
    cfg.utility = parse_utility(utility_kind, phi, rounds, coeffs);
  } catch (const Error& e) {
    fail(ErrorCode::InvalidConfig, source + ": " + e.what());
  }
  if (!theta.empty()) cfg.utility.theta = NodeWeights(theta);
  return cfg;
}

ExperimentConfig ExperimentConfig::parse_file(const std::string& path) {
  std::ifstream in(path);
  require(static_cast<bool>(in), ErrorCode::InvalidConfig, "cannot open config file " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse(buffer.str(), path);
}

std::string classify_graph(const Graph& g) {
  if (!g.unweighted()) return is_weighted_nsg(g) ? "weighted-NSG" : "weighted";
  if (is_quasi_complete(g).has_value()) return "QC";
  if (g.size() <= 10 && isomorphic(g, quasi_star(g.size(), g.link_count()))) return "QS";
  return is_nsg(g) ? "NSG" : "non-NSG";
}

std::string RunReport::csv() const {
  std::ostringstream out;
  out << "period,links,utility,nsg,qc\n";
  for (const PeriodReport& p : periods)
    out << p.period << ',' << p.links << ',' << format_num(p.utility) << ',' << (p.nsg ? 1 : 0)
        << ',' << (p.qc ? 1 : 0) << "\n";
  return out.str();
}

std::string RunReport::json() const {
  nlohmann::ordered_json doc;
  doc["mode"] = mode;
  doc["nodes"] = nodes;
  doc["horizon"] = horizon;
  doc["seed"] = seed;
  doc["value"] = value;
  doc["final_class"] = final_class;
  doc["periods"] = nlohmann::ordered_json::array();
  for (const PeriodReport& p : periods) {
    nlohmann::ordered_json item;
    item["t"] = p.period;
    item["links"] = p.links;
    item["utility"] = p.utility;
    item["nsg"] = p.nsg;
    item["qc"] = p.qc;
    doc["periods"].push_back(item);
  }
  return doc.dump(2) + "\n";
}

namespace {

const char* mode_name(RunMode mode) {
  switch (mode) {
    case RunMode::Greedy: return "greedy";
    case RunMode::Optimal: return "optimal";
    case RunMode::Delegate: return "delegate";
    case RunMode::WeightedStep: return "weighted-step";
  }
  return "?";
}

void write_file(const std::string& dir, const std::string& name, const std::string& content) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  std::ofstream out(fs::path(dir) / name, std::ios::binary);
  require(static_cast<bool>(out), ErrorCode::InvalidConfig, "cannot write into " + dir);
  out << content;
}

RunReport report_for_path(const ExperimentConfig& config, const FormationPath& path,
                          double value) {
  RunReport report;
  report.mode = mode_name(config.mode);
  report.nodes = config.nodes;
  report.horizon = config.horizon;
  report.seed = config.seed;
  report.value = value;
  report.path = path;
  for (int t = 1; t <= path.horizon(); ++t) {
    const Graph& g = path.at_period(t);
    PeriodReport p;
    p.period = t;
    p.links = g.link_count();
    p.utility = evaluate_utility(g, config.utility);
    if (g.unweighted()) {
      p.nsg = static_cast<bool>(is_nsg(g));
      p.qc = is_quasi_complete(g).has_value();
    } else {
      p.nsg = static_cast<bool>(is_weighted_nsg(g));
      p.qc = false;
    }
    report.periods.push_back(p);
  }
  report.final_class = classify_graph(path.graphs.back());
  return report;
}

}  // namespace

RunReport run_config(const ExperimentConfig& config) {
  RunReport report;
  switch (config.mode) {
    case RunMode::Greedy: {
      const FormationPath path = greedy_path(config.nodes, config.horizon, config.utility);
      const DiscountSchedule d = config.discount(config.horizon);
      report = report_for_path(config, path, evaluate_path(path, d, config.utility));
      break;
    }
    case RunMode::Optimal: {
      const DiscountSchedule d = config.discount(config.horizon);
      const DpResult result = optimal_path_dp(config.nodes, config.horizon, d, config.utility,
                                              config.restrict_nsg);
      report = report_for_path(config, result.path, result.value);
      break;
    }
    case RunMode::Delegate: {
      AgentSequence agents;
      if (config.agents.empty())
        agents = delegation_recipe(greedy_path(config.nodes, config.horizon, config.utility));
      else
        agents.agents = config.agents;
      const FormationPath path =
          delegated_path(config.nodes, config.horizon, agents, config.phi_agent);
      const DiscountSchedule d = config.discount(config.horizon);
      report = report_for_path(config, path, evaluate_path(path, d, config.utility));
      break;
    }
    case RunMode::WeightedStep: {
      const Graph base = quasi_complete(config.nodes, config.horizon);
      const Graph chosen = best_weighted_step_kb2(base, config.utility.phi, config.resolution);
      FormationPath path;
      path.weighted = !chosen.unweighted();
      // Single-period report over the chosen successor.
      report.mode = mode_name(config.mode);
      report.nodes = config.nodes;
      report.horizon = config.horizon;
      report.seed = config.seed;
      report.value = aggregate_kb_squared(chosen, config.utility.phi);
      report.final_class = classify_graph(chosen);
      PeriodReport p;
      p.period = 1;
      p.links = chosen.link_count();
      p.utility = report.value;
      p.nsg = chosen.unweighted() ? static_cast<bool>(is_nsg(chosen))
                                  : static_cast<bool>(is_weighted_nsg(chosen));
      p.qc = chosen.unweighted() && is_quasi_complete(chosen).has_value();
      report.periods.push_back(p);
      path.graphs.push_back(chosen);
      report.path = path;

      std::ostringstream edit_csv;
      edit_csv << "i,j,dw\n";
      for (int i = 0; i < base.size(); ++i)
        for (int j = i + 1; j < base.size(); ++j) {
          const double dw = chosen.weight(i, j) - base.weight(i, j);
          if (dw > 0.0)
            edit_csv << (i + 1) << ',' << (j + 1) << ',' << format_num(dw) << "\n";
        }
      write_file(config.out_dir, "edit.csv", edit_csv.str());
      break;
    }
  }

  for (int t = 1; t <= report.path.horizon(); ++t) {
    char name[32];
    std::snprintf(name, sizeof(name), "period_%02d.dot", t);
    write_file(config.out_dir, name, to_dot(report.path.at_period(t)));
  }
  write_file(config.out_dir, "periods.csv", report.csv());
  write_file(config.out_dir, "summary.json", report.json());
  return report;
}

std::string Table2Report::csv() const {
  std::ostringstream out;
  out << "class,b2,expected,is_max\n";
  char expected[16];
  for (const Table2Row& row : rows) {
    std::snprintf(expected, sizeof(expected), "%.4f", row.expected);
    out << row.label << ',' << format_num(row.value) << ',' << expected << ','
        << (row.maximizer ? 1 : 0) << "\n";
  }
  return out.str();
}

Table2Report run_table2(double tolerance) {
  std::vector<Graph> classes = enumerate_nsg(7, 8);
  require(classes.size() == 4, ErrorCode::ReproductionFailure,
          "expected exactly four NSG classes at n=7, t=8");
  const double phi = 0.01;

  int qc_index = -1, qs_index = -1;
  std::vector<double> values(classes.size());
  for (std::size_t k = 0; k < classes.size(); ++k) {
    values[k] = aggregate_kb_squared(classes[k], phi);
    if (is_quasi_complete(classes[k]).has_value()) qc_index = static_cast<int>(k);
    if (isomorphic(classes[k], quasi_star(7, 8))) qs_index = static_cast<int>(k);
  }
  require(qc_index >= 0 && qs_index >= 0 && qc_index != qs_index, ErrorCode::ReproductionFailure,
          "QC and QS classes not found among the four");
  // The two remaining classes are pinned by their computed values, the
  // larger one first.
  std::vector<int> rest;
  for (int k = 0; k < 4; ++k)
    if (k != qc_index && k != qs_index) rest.push_back(k);
  if (values[rest[0]] < values[rest[1]]) std::swap(rest[0], rest[1]);

  Table2Report report;
  report.tolerance = tolerance;
  const double expected[4] = {7.3370, 7.3374, 7.3368, 7.3362};
  const int order[4] = {qc_index, qs_index, rest[0], rest[1]};
  const char* labels[4] = {"QC(8)", "QS(8)", "Ghat(8)", "Gbar(8)"};
  int max_row = 0;
  for (int r = 1; r < 4; ++r)
    if (values[order[r]] > values[order[max_row]]) max_row = r;
  report.pass = true;
  for (int r = 0; r < 4; ++r) {
    Table2Row row;
    row.label = labels[r];
    row.value = values[order[r]];
    row.expected = expected[r];
    row.maximizer = r == max_row;
    if (std::abs(row.value - row.expected) > tolerance) report.pass = false;
    report.rows.push_back(row);
  }
  if (!report.rows[1].maximizer) report.pass = false;  // the quasi-star leads the table
  return report;
}

}  // namespace seqnet
