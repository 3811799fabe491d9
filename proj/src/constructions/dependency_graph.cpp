#include "gpl/constructions/dependency_graph.hpp"

#include <algorithm>
#include <cmath>

namespace gpl::constructions {

double angle_between(const geom::Vector& a, const geom::Vector& b) {
  const double c = a.dot(b) / (a.norm() * b.norm());
  return std::acos(std::clamp(c, -1.0, 1.0));
}

std::size_t DependencyGraph::max_degree() const {
  std::size_t best = 0;
  for (const auto& row : adjacency) best = std::max(best, row.size());
  return best;
}

bool DependencyGraph::adjacent(std::size_t i, std::size_t j) const {
  return std::binary_search(adjacency[i].begin(), adjacency[i].end(), j);
}

DependencyGraph build_dependency_graph(const CellPartition& cells) {
  DependencyGraph g;
  g.m = cells.size();
  g.R = cells.R;
  g.r = cells.r;
  const double rho = cells.net.radius;
  g.alpha_cell = 2.0 * std::asin(std::min(1.0, cells.net.min_sep / (2.0 * rho)));
  g.gamma = std::acos(std::clamp(cells.r / cells.R, -1.0, 1.0));
  g.theta_edge = 2.0 * g.alpha_cell + 4.0 * g.gamma;
  g.adjacency.assign(g.m, {});
  for (std::size_t i = 0; i < g.m; ++i) {
    for (std::size_t j = i + 1; j < g.m; ++j) {
      if (angle_between(cells.net.centers[i], cells.net.centers[j]) <= g.theta_edge) {
        g.adjacency[i].push_back(j);
        g.adjacency[j].push_back(i);
      }
    }
  }
  for (auto& row : g.adjacency) std::sort(row.begin(), row.end());
  return g;
}

nlohmann::json to_json(const DependencyGraph& g) {
  return {{"m", g.m},
          {"R", g.R},
          {"r", g.r},
          {"alpha_cell", g.alpha_cell},
          {"gamma", g.gamma},
          {"theta_edge", g.theta_edge},
          {"max_degree", g.max_degree()},
          {"adjacency", g.adjacency}};
}

}  // namespace gpl::constructions
