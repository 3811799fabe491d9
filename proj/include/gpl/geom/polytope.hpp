#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "gpl/geom/types.hpp"

namespace gpl::geom {

/// A simplicial facet: d vertex indices into the owning polytope, with the
/// outward unit normal and offset (normal . v for any facet vertex v).
struct Facet {
  std::array<int, kMaxDim> vertices{};
  Vector normal;
  double offset = 0.0;
};

/// Convex hull of a finite point set, stored as vertices plus simplicial
/// facets. Produced by `convex_hull`; immutable afterwards.
class Polytope {
 public:
  Polytope() = default;
  Polytope(int dim, std::vector<Vector> vertices, std::vector<std::size_t> source_indices,
           std::vector<Facet> facets, double scale);

  int dim() const noexcept { return dim_; }
  const std::vector<Vector>& vertices() const noexcept { return vertices_; }
  /// Index of each vertex in the point set the hull was built from.
  const std::vector<std::size_t>& source_indices() const noexcept { return source_; }
  const std::vector<Facet>& facets() const noexcept { return facets_; }
  std::span<const int> facet_vertices(std::size_t f) const {
    return {facets_[f].vertices.data(), static_cast<std::size_t>(dim_)};
  }
  /// Coordinate scale of the input; tolerances are relative to it.
  double scale() const noexcept { return scale_; }

  Vector vertex_centroid() const;
  double max_vertex_norm() const;

  /// True if x lies inside or on the boundary (within kEpsGeom * scale).
  bool contains(std::span<const double> x) const noexcept;
  bool contains(const Vector& x) const noexcept {
    return contains(std::span<const double>(x.data(), static_cast<std::size_t>(x.size())));
  }

 private:
  int dim_ = 0;
  std::vector<Vector> vertices_;
  std::vector<std::size_t> source_;
  std::vector<Facet> facets_;
  double scale_ = 1.0;
};

/// Sum of simplex volumes from the vertex centroid over all facets.
double volume(const Polytope& p);

/// Number of distinct s-faces, 0 <= s <= d-1, of a simplicial polytope.
std::size_t face_count(const Polytope& p, int s);

/// All s-faces as sorted vertex-index tuples, in ascending lexicographic order.
std::vector<std::vector<int>> enumerate_faces(const Polytope& p, int s);

/// f_0 .. f_{d-1}.
std::vector<std::size_t> f_vector(const Polytope& p);

/// Sum of facet (d-1)-volumes.
double surface_area(const Polytope& p);

}  // namespace gpl::geom
