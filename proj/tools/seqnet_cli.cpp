// Command-line front end for the sequential network design library.
//
// Exit codes: 0 success, 1 runtime error, 2 reproduction failure,
// 3 invalid config / bad input file.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "seqnet/experiment.hpp"
#include "seqnet/reallocation.hpp"
#include "seqnet/structures.hpp"

namespace {

using namespace seqnet;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  require(static_cast<bool>(in), ErrorCode::InvalidConfig, "cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& dir, const std::string& name, const std::string& content) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  std::ofstream out(fs::path(dir) / name, std::ios::binary);
  require(static_cast<bool>(out), ErrorCode::InvalidConfig, "cannot write into " + dir);
  out << content;
}

std::string format_num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

struct SharedFlags {
  int nodes = 7;
  int horizon = 8;
  std::string utility = "kb2";
  double phi = 0.01;
  int rounds = 5;
  std::vector<double> coeffs;
  std::string discount = "farsighted";
  bool restrict_nsg = false;
  std::string out = "csv";
  std::string out_dir;

  void attach(CLI::App* cmd, bool with_discount) {
    cmd->add_option("--nodes", nodes, "node count");
    cmd->add_option("--horizon", horizon, "number of periods");
    cmd->add_option("--utility", utility, "kb | kb2 | diffusion | spectral | walks");
    cmd->add_option("--phi", phi, "decay parameter");
    cmd->add_option("--rounds", rounds, "diffusion rounds L");
    cmd->add_option("--walk-coeffs", coeffs, "coefficients for the walks utility")
        ->delimiter(',');
    if (with_discount)
      cmd->add_option("--discount", discount,
                      "farsighted | geometric:d | myopic:e | file:PATH");
    cmd->add_flag("--restrict-nsg", restrict_nsg, "search NSG states only");
    cmd->add_option("--out", out, "csv | dot | json (stdout format)");
    cmd->add_option("--out-dir", out_dir, "write DOT/CSV/JSON files here");
  }

  ExperimentConfig to_config(RunMode mode) const {
    ExperimentConfig cfg;
    cfg.mode = mode;
    cfg.nodes = nodes;
    cfg.horizon = horizon;
    cfg.utility = parse_utility(utility, phi, rounds, coeffs);
    cfg.discount_spec = discount;
    cfg.restrict_nsg = restrict_nsg;
    cfg.out_dir = out_dir;
    return cfg;
  }
};

void emit_report(const SharedFlags& flags, const RunReport& report) {
  if (flags.out == "csv") {
    std::cout << report.csv();
  } else if (flags.out == "json") {
    std::cout << report.json();
  } else if (flags.out == "dot") {
    std::cout << to_dot(report.path.graphs.back());
  } else {
    fail(ErrorCode::InvalidConfig, "unknown output format '" + flags.out + "'");
  }
}

RunReport run_mode(const SharedFlags& flags, RunMode mode) {
  ExperimentConfig cfg = flags.to_config(mode);
  if (cfg.out_dir.empty()) {
    // No directory requested: compute in place, print to stdout only.
    cfg.out_dir = std::filesystem::temp_directory_path() / "seqnet-cli";
  }
  return run_config(cfg);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sequential network design engine"};
  app.require_subcommand(1);

  SharedFlags greedy_flags, optimal_flags, delegate_flags, evaluate_flags;

  CLI::App* greedy = app.add_subcommand("greedy", "one link per period, myopically best");
  greedy_flags.attach(greedy, true);

  CLI::App* optimal = app.add_subcommand("optimal", "exact optimum over formation paths");
  optimal_flags.attach(optimal, true);

  CLI::App* delegate_cmd = app.add_subcommand("delegate", "agents pick their own best links");
  delegate_flags.attach(delegate_cmd, true);
  std::vector<int> agents_1based;
  double phi_agent = 0.01;
  delegate_cmd->add_option("--agents", agents_1based, "1-based agent per period")->delimiter(',');
  delegate_cmd->add_option("--phi-agent", phi_agent, "decay for the agents' rooted centrality");

  CLI::App* evaluate = app.add_subcommand("evaluate", "score a path file");
  evaluate_flags.attach(evaluate, true);
  std::string evaluate_path_file;
  evaluate->add_option("--path", evaluate_path_file, "path file (matrix blocks)")->required();

  CLI::App* equilibrium = app.add_subcommand("equilibrium", "solve the network game");
  std::string eq_graph_file, eq_psi = "linear:1,0.05", eq_out_dir;
  double eq_tol = 1e-12;
  int eq_max_iter = 100000;
  equilibrium->add_option("--graph", eq_graph_file, "matrix text file")->required();
  equilibrium->add_option("--psi", eq_psi, "linear:a,b | quad:a,b,c");
  equilibrium->add_option("--tol", eq_tol, "fixed-point tolerance");
  equilibrium->add_option("--max-iter", eq_max_iter, "iteration cap");
  equilibrium->add_option("--out-dir", eq_out_dir, "write CSV and JSON sidecar here");

  CLI::App* weighted_step = app.add_subcommand("weighted-step", "best unit-of-weight placement");
  int ws_nodes = 7, ws_links = 8, ws_resolution = 8;
  double ws_phi = 0.01;
  std::string ws_out_dir, ws_graph_file;
  weighted_step->add_option("--nodes", ws_nodes, "node count of the QC base");
  weighted_step->add_option("--links", ws_links, "links of the QC base");
  weighted_step->add_option("--graph", ws_graph_file, "matrix text file for a custom base");
  weighted_step->add_option("--resolution", ws_resolution, "grid spacing 1/resolution");
  weighted_step->add_option("--phi", ws_phi, "decay parameter");
  weighted_step->add_option("--out-dir", ws_out_dir, "write the chosen edit CSV here");

  CLI::App* enumerate = app.add_subcommand("enumerate-nsg", "list NSG classes for (n, t)");
  int en_nodes = 7, en_links = 8;
  double en_phi = 0.01;
  std::string en_out_dir;
  enumerate->add_option("--nodes", en_nodes, "node count");
  enumerate->add_option("--links", en_links, "link count");
  enumerate->add_option("--phi", en_phi, "decay for the b2 column");
  enumerate->add_option("--out-dir", en_out_dir, "write one DOT per class plus the CSV index");

  CLI::App* repair = app.add_subcommand("repair", "rebuild a path into an all-NSG one");
  std::string repair_path_file, repair_out_dir;
  repair->add_option("--path", repair_path_file, "path file (matrix blocks)")->required();
  repair->add_option("--out-dir", repair_out_dir, "write repaired path and walk deltas here");

  CLI::App* reproduce = app.add_subcommand("reproduce", "recompute published tables");
  std::string reproduce_target;
  double reproduce_tol = 5e-5;
  std::string reproduce_out_dir;
  reproduce->add_option("target", reproduce_target, "table2")->required();
  reproduce->add_option("--tolerance", reproduce_tol, "per-entry tolerance");
  reproduce->add_option("--out-dir", reproduce_out_dir, "write the CSV here");

  CLI::App* run = app.add_subcommand("run", "execute a config file");
  std::string run_config_file;
  run->add_option("config", run_config_file, "experiment config")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (greedy->parsed()) {
      emit_report(greedy_flags, run_mode(greedy_flags, RunMode::Greedy));
    } else if (optimal->parsed()) {
      emit_report(optimal_flags, run_mode(optimal_flags, RunMode::Optimal));
    } else if (delegate_cmd->parsed()) {
      ExperimentConfig cfg = delegate_flags.to_config(RunMode::Delegate);
      for (int a : agents_1based) {
        require(a >= 1, ErrorCode::InvalidConfig, "agents are 1-based node indices");
        cfg.agents.push_back(a - 1);
      }
      cfg.phi_agent = phi_agent;
      if (cfg.out_dir.empty())
        cfg.out_dir = std::filesystem::temp_directory_path() / "seqnet-cli";
      emit_report(delegate_flags, run_config(cfg));
    } else if (evaluate->parsed()) {
      const FormationPath path = from_path_text(read_file(evaluate_path_file));
      const UtilitySpec u = parse_utility(evaluate_flags.utility, evaluate_flags.phi,
                                          evaluate_flags.rounds, evaluate_flags.coeffs);
      const DiscountSchedule d = parse_discount(evaluate_flags.discount, path.horizon());
      std::ostringstream csv;
      csv << "period,links,utility\n";
      for (int t = 1; t <= path.horizon(); ++t)
        csv << t << ',' << path.at_period(t).link_count() << ','
            << format_num(evaluate_utility(path.at_period(t), u)) << "\n";
      std::cout << csv.str();
      std::cout << "value," << format_num(evaluate_path(path, d, u)) << "\n";
    } else if (equilibrium->parsed()) {
      const Graph g = from_matrix_text(read_file(eq_graph_file));
      ResponseFunction psi = [&]() {
        if (eq_psi.rfind("linear:", 0) == 0) {
          double a = 0, b = 0;
          require(std::sscanf(eq_psi.c_str(), "linear:%lf,%lf", &a, &b) == 2,
                  ErrorCode::InvalidConfig, "bad --psi spec");
          return ResponseFunction::linear(a, b);
        }
        if (eq_psi.rfind("quad:", 0) == 0) {
          double a = 0, b = 0, c = 0;
          require(std::sscanf(eq_psi.c_str(), "quad:%lf,%lf,%lf", &a, &b, &c) == 3,
                  ErrorCode::InvalidConfig, "bad --psi spec");
          return ResponseFunction::quadratic(a, b, c);
        }
        fail(ErrorCode::InvalidConfig, "unknown --psi spec '" + eq_psi + "'");
      }();
      const EquilibriumTrace trace = solve_equilibrium(g, psi, eq_tol, eq_max_iter);
      std::ostringstream csv;
      csv << "node,action\n";
      for (std::size_t i = 0; i < trace.actions.size(); ++i)
        csv << (i + 1) << ',' << format_num(trace.actions[i]) << "\n";
      nlohmann::ordered_json meta;
      meta["psi"] = psi.label();
      meta["converged"] = trace.converged;
      meta["iterations"] = trace.iterations;
      meta["residual"] = trace.residual;
      std::cout << csv.str();
      if (!eq_out_dir.empty()) {
        write_file(eq_out_dir, "actions.csv", csv.str());
        write_file(eq_out_dir, "equilibrium.json", meta.dump(2) + "\n");
      }
    } else if (weighted_step->parsed()) {
      const Graph base = ws_graph_file.empty() ? quasi_complete(ws_nodes, ws_links)
                                               : from_matrix_text(read_file(ws_graph_file));
      const Graph chosen = best_weighted_step_kb2(base, ws_phi, ws_resolution);
      std::ostringstream csv;
      csv << "i,j,dw\n";
      for (int i = 0; i < base.size(); ++i)
        for (int j = i + 1; j < base.size(); ++j) {
          const double dw = chosen.weight(i, j) - base.weight(i, j);
          if (dw > 0.0) csv << (i + 1) << ',' << (j + 1) << ',' << format_num(dw) << "\n";
        }
      std::cout << csv.str();
      if (!ws_out_dir.empty()) write_file(ws_out_dir, "edit.csv", csv.str());
    } else if (enumerate->parsed()) {
      const std::vector<Graph> classes = enumerate_nsg(en_nodes, en_links);
      std::ostringstream csv;
      csv << "class_id,degree_sequence,b2_at_phi\n";
      for (std::size_t k = 0; k < classes.size(); ++k) {
        std::vector<int> degs = classes[k].degrees();
        std::sort(degs.rbegin(), degs.rend());
        std::string seq;
        for (std::size_t d = 0; d < degs.size(); ++d) {
          if (d > 0) seq += ' ';
          seq += std::to_string(degs[d]);
        }
        csv << k << ',' << seq << ',' << format_num(aggregate_kb_squared(classes[k], en_phi))
            << "\n";
        if (!en_out_dir.empty()) {
          char name[32];
          std::snprintf(name, sizeof(name), "class_%02zu.dot", k);
          write_file(en_out_dir, name, to_dot(classes[k]));
        }
      }
      std::cout << csv.str();
      if (!en_out_dir.empty()) write_file(en_out_dir, "index.csv", csv.str());
    } else if (repair->parsed()) {
      const FormationPath input = from_path_text(read_file(repair_path_file));
      const RepairReport result = repair_path_report(input);
      std::ostringstream csv;
      csv << "period,k,input_count,repaired_count,delta\n";
      const int k_max = 2 * input.nodes();
      for (int t = 1; t <= input.horizon(); ++t) {
        const WalkProfile before = walk_profile(input.at_period(t), k_max);
        const WalkProfile after = walk_profile(result.repaired.at_period(t), k_max);
        for (int k = 2; k <= k_max; ++k)
          csv << t << ',' << k << ',' << format_num(before.counts[k]) << ','
              << format_num(after.counts[k]) << ','
              << format_num(after.counts[k] - before.counts[k]) << "\n";
      }
      std::cout << "passes," << result.passes << "\n";
      if (!repair_out_dir.empty()) {
        write_file(repair_out_dir, "repaired_path.txt", to_path_text(result.repaired));
        write_file(repair_out_dir, "walk_deltas.csv", csv.str());
      } else {
        std::cout << csv.str();
      }
    } else if (reproduce->parsed()) {
      require(reproduce_target == "table2", ErrorCode::InvalidConfig,
              "unknown reproduction target '" + reproduce_target + "'");
      const Table2Report report = run_table2(reproduce_tol);
      std::cout << report.csv();
      if (!reproduce_out_dir.empty()) write_file(reproduce_out_dir, "table2.csv", report.csv());
      if (!report.pass) {
        std::cerr << "reproduction failed beyond tolerance " << reproduce_tol << "\n";
        return 2;
      }
    } else if (run->parsed()) {
      const ExperimentConfig cfg = ExperimentConfig::parse_file(run_config_file);
      const RunReport report = run_config(cfg);
      std::cout << report.json();
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (e.code() == ErrorCode::InvalidConfig) return 3;
    if (e.code() == ErrorCode::ReproductionFailure) return 2;
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
