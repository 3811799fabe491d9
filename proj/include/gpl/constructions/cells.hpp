#pragma once

#include <cstddef>
#include <vector>

#include "gpl/constructions/sphere_net.hpp"
#include "gpl/geom/polytope.hpp"
#include "gpl/sampling/rng.hpp"

namespace gpl::constructions {

/// Voronoi cells of a net on S(rho), cut to the annulus r <= |x| <= R.
struct CellPartition {
  SphereNet net;
  double R = 0.0;
  double r = 0.0;

  std::size_t size() const noexcept { return net.size(); }
  bool in_annulus(const geom::Vector& x) const;
  /// Nearest center, ties to the lowest index. Defined for every x; callers
  /// check in_annulus when it matters.
  std::size_t cell_of(const geom::Vector& x) const;
  std::size_t cell_of(std::span<const double> x) const;
};

/// Throws Error(config_invalid) unless r < net.radius < R.
CellPartition build_cells(SphereNet net, double R, double r);

/// Uniform point in the annulus r <= |x| <= outer.
geom::Vector uniform_in_annulus(int d, double r, double outer, sampling::RngStream& rng);

double annulus_volume(int d, double r, double outer);

struct CellStats {
  /// Dart estimates of Vol(W_i cap p) and their standard errors.
  std::vector<double> xi;
  std::vector<double> xi_se;
  double xi_sum = 0.0;
  double xi_sum_se = 0.0;
  /// (s+1) f(W_i, s): the number of (face, vertex) incidences of s-faces
  /// with vertices in W_i. These sum to (s+1) f_s(p).
  std::vector<std::size_t> face_numerators;
  /// Sample points per cell (points outside the annulus are not counted).
  std::vector<std::size_t> point_counts;
  int s = 0;

  double face_share(std::size_t i) const { return static_cast<double>(face_numerators[i]) / (s + 1); }
};

/// Per-cell volume and face shares of p. Throws Error(condition_b_violated)
/// unless B(r) lies inside p.
CellStats cell_statistics(const geom::Polytope& p, const CellPartition& cells, const geom::PointSet& sample,
                          int s, std::size_t darts, sampling::RngStream& rng);

/// Largest number of sample points in one cell.
std::size_t max_cell_load(const CellPartition& cells, const geom::PointSet& sample);

}  // namespace gpl::constructions
