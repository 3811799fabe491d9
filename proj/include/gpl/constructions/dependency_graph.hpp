#pragma once

#include <cstddef>
#include <vector>

#include "json.hpp"
#include "gpl/constructions/cells.hpp"

namespace gpl::constructions {

/// Cells i and j are joined when the angle between their centers is at most
/// theta_edge = 2 alpha_cell + 4 gamma, where alpha_cell = 2 asin(min_sep /
/// (2 rho)) bounds the angular radius of a cell and gamma = acos(r / R)
/// bounds the half-angle subtended by a segment that stays in the annulus.
struct DependencyGraph {
  std::size_t m = 0;
  std::vector<std::vector<std::size_t>> adjacency;
  double R = 0.0;
  double r = 0.0;
  double alpha_cell = 0.0;
  double gamma = 0.0;
  double theta_edge = 0.0;

  std::size_t max_degree() const;
  bool adjacent(std::size_t i, std::size_t j) const;
};

DependencyGraph build_dependency_graph(const CellPartition& cells);

/// Angle between two nonzero vectors.
double angle_between(const geom::Vector& a, const geom::Vector& b);

nlohmann::json to_json(const DependencyGraph& g);

}  // namespace gpl::constructions
