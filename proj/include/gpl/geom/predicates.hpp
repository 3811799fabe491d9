#pragma once

#include "gpl/geom/polytope.hpp"
#include "gpl/geom/types.hpp"

namespace gpl::geom {

/// True if the closed segment [a, b] stays at distance >= radius from the
/// origin.
bool segment_avoids_ball(const Vector& a, const Vector& b, double radius);

/// Smallest distance from the origin to the segment [a, b].
double segment_origin_distance(const Vector& a, const Vector& b);

/// True if B(radius) lies inside p, i.e. every facet offset is >= radius.
/// Throws Error(origin_outside) unless the origin is interior to p.
bool ball_contained_in(const Polytope& p, double radius);

/// Radius of the largest origin-centred ball inside p (the minimum facet
/// offset). Throws Error(origin_outside) as above.
double inner_radius(const Polytope& p);

}  // namespace gpl::geom
