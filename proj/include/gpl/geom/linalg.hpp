#pragma once

#include <optional>
#include <span>

#include "gpl/geom/types.hpp"

namespace gpl::geom {

/// Unit normal of the hyperplane through d points in R^d (rows of `points`),
/// computed by cofactor expansion. Returns nullopt when the points are
/// affinely dependent relative to `scale`.
std::optional<Vector> hyperplane_normal(std::span<const Vector> points, double scale);

/// Hyperplane through d points; normal sign is arbitrary.
std::optional<Hyperplane> affine_hyperplane(std::span<const Vector> points, double scale);

/// |det| / d! of the simplex spanned by base and the d vertices.
double simplex_volume(const Vector& base, std::span<const Vector> vertices);

/// k-dimensional volume of a k-simplex embedded in R^d (Gram determinant).
double simplex_measure(std::span<const Vector> vertices);

/// Orthonormal basis of the orthogonal complement of `direction`.
std::vector<Vector> orthonormal_complement(const Vector& direction);

double factorial(int k);

}  // namespace gpl::geom
