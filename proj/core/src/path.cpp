#include "seqnet/path.hpp"

#include <cmath>
#include <sstream>

namespace seqnet {

namespace {

constexpr double kMassTol = 1e-9;

void check_step(const Graph& before, const Graph& after, bool weighted, int period) {
  require(before.size() == after.size(), ErrorCode::InvalidPath,
          "node count changes at period " + std::to_string(period));
  if (!weighted) {
    require(before.unweighted() && after.unweighted(), ErrorCode::InvalidPath,
            "weighted entries in an unweighted path");
    int added = 0;
    for (int i = 0; i < before.size(); ++i)
      for (int j = i + 1; j < before.size(); ++j) {
        const double d = after.weight(i, j) - before.weight(i, j);
        require(d >= 0.0, ErrorCode::InvalidPath,
                "link removed at period " + std::to_string(period));
        if (d != 0.0) ++added;
      }
    require(added == 1, ErrorCode::InvalidPath,
            "period " + std::to_string(period) + " must add exactly one link");
  } else {
    double mass = 0.0;
    for (int i = 0; i < before.size(); ++i)
      for (int j = i + 1; j < before.size(); ++j) {
        const double d = after.weight(i, j) - before.weight(i, j);
        require(d >= -kMassTol, ErrorCode::InvalidPath,
                "weight removed at period " + std::to_string(period));
        mass += d;
      }
    require(std::abs(mass - 1.0) <= kMassTol, ErrorCode::InvalidPath,
            "period " + std::to_string(period) + " must add one unit of weight");
  }
}

}  // namespace

FormationPath make_path(std::vector<Graph> graphs, bool weighted) {
  FormationPath path;
  path.graphs = std::move(graphs);
  path.weighted = weighted;
  validate_path(path);
  return path;
}

void validate_path(const FormationPath& path) {
  require(!path.graphs.empty(), ErrorCode::InvalidPath, "path has no periods");
  const Graph origin = Graph::empty(path.graphs.front().size());
  check_step(origin, path.graphs.front(), path.weighted, 1);
  for (std::size_t t = 1; t < path.graphs.size(); ++t)
    check_step(path.graphs[t - 1], path.graphs[t], path.weighted, static_cast<int>(t) + 1);
}

LinkEdit edit_between(const Graph& before, const Graph& after) {
  require(before.size() == after.size(), ErrorCode::InvalidComparison, "node counts differ");
  int ei = -1, ej = -1, changed = 0;
  for (int i = 0; i < before.size(); ++i)
    for (int j = i + 1; j < before.size(); ++j)
      if (before.weight(i, j) != after.weight(i, j)) {
        ei = i;
        ej = j;
        ++changed;
      }
  require(changed == 1, ErrorCode::InvalidPath, "graphs do not differ by exactly one link");
  return LinkEdit(ei, ej);
}

std::string to_path_text(const FormationPath& path) {
  std::ostringstream out;
  for (std::size_t t = 0; t < path.graphs.size(); ++t) {
    if (t > 0) out << "\n";
    out << to_matrix_text(path.graphs[t]);
  }
  return out.str();
}

FormationPath from_path_text(const std::string& text) {
  std::vector<Graph> graphs;
  std::istringstream in(text);
  std::string block;
  std::string line;
  auto flush = [&]() {
    if (block.find_first_not_of(" \t\r\n") == std::string::npos) return;
    graphs.push_back(from_matrix_text(block));
    block.clear();
  };
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) {
      flush();
    } else {
      block += line;
      block += '\n';
    }
  }
  flush();
  require(!graphs.empty(), ErrorCode::InvalidPath, "path file has no matrix blocks");
  bool weighted = false;
  for (const Graph& g : graphs)
    if (!g.unweighted()) weighted = true;
  return make_path(std::move(graphs), weighted);
}

bool DiscountSchedule::strictly_positive() const {
  for (double w : weights)
    if (w <= 0.0) return false;
  return !weights.empty();
}

}  // namespace seqnet
