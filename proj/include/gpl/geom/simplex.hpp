#pragma once

#include <vector>

#include "gpl/geom/types.hpp"

namespace gpl::geom {

/// Vertices of a regular k-simplex with the given circumradius, centred at
/// `center` and lying in center + span(frame). `frame` must hold k
/// orthonormal vectors; throws Error(bad_frame) otherwise.
std::vector<Vector> regular_simplex(int k, double circumradius, const Vector& center,
                                    const std::vector<Vector>& frame);

/// True if every vertex of `s` is apex + sum lambda_j g_j with all
/// lambda_j >= -kEpsGeom. Throws Error(singular_generators) when the
/// generators do not span R^d.
bool cone_contains(const Cone& c, const Simplex& s);

}  // namespace gpl::geom
