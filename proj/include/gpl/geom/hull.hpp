#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "gpl/geom/polytope.hpp"
#include "gpl/geom/types.hpp"

namespace gpl::geom {

/// Incremental (beneath-beyond) convex hull in R^d, 2 <= d <= kMaxDim.
///
/// Every uninserted point outside the current hull sits in the conflict list
/// of exactly one facet it sees; points that see no facet are discarded as
/// interior. The next point inserted is the furthest point of some conflict
/// list, which keeps the new facets well conditioned. `extend` inserts more
/// points of the same point set into an existing hull, so a hull of a prefix
/// can be grown into the hull of the full sample without recomputation.
///
/// The hull keeps a pointer to the point set; the point set must outlive it.
/// Throws Error(degenerate_input) if the points are affinely dependent beyond
/// kEpsGeom, Error(dimension_mismatch) for unsupported dimensions.
class IncrementalHull {
 public:
  /// Hull of the first `count` points of `points`.
  IncrementalHull(const PointSet& points, std::size_t count);
  explicit IncrementalHull(const PointSet& points) : IncrementalHull(points, points.size()) {}

  /// Insert points [inserted(), new_count).
  void extend(std::size_t new_count);

  std::size_t inserted() const noexcept { return inserted_; }
  Polytope polytope() const;

 private:
  struct HullFacet {
    std::array<int, kMaxDim> v{};
    std::array<int, kMaxDim> nb{};
    std::array<double, kMaxDim> normal{};
    double offset = 0.0;
    std::vector<int> outside;
    int furthest = -1;
    double furthest_dist = 0.0;
    bool alive = true;
    unsigned mark = 0;
  };

  double distance(const HullFacet& f, int point) const noexcept;
  void build_initial_simplex();
  int make_facet(const std::array<int, kMaxDim>& verts);
  void assign_outside(int point, std::span<const int> candidates);
  void drain();
  void insert_apex(int apex, int start_facet);

  const PointSet* points_;
  int dim_;
  double scale_;
  double eps_;
  std::size_t inserted_ = 0;
  std::vector<double> interior_;
  std::vector<HullFacet> facets_;
  std::vector<int> pending_;
  unsigned mark_ = 0;
};

/// Convex hull of all points.
Polytope convex_hull(const PointSet& points);
Polytope convex_hull(const std::vector<Vector>& points);

}  // namespace gpl::geom
