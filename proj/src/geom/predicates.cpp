#include "gpl/geom/predicates.hpp"

#include <algorithm>
#include <limits>

#include "gpl/error.hpp"

namespace gpl::geom {

double segment_origin_distance(const Vector& a, const Vector& b) {
  const Vector e = b - a;
  const double ee = e.squaredNorm();
  const double t = ee > 0.0 ? std::clamp(-a.dot(e) / ee, 0.0, 1.0) : 0.0;
  return (a + t * e).norm();
}

bool segment_avoids_ball(const Vector& a, const Vector& b, double radius) {
  return segment_origin_distance(a, b) >= radius;
}

double inner_radius(const Polytope& p) {
  const double eps = kEpsGeom * p.scale();
  double r = std::numeric_limits<double>::infinity();
  for (const auto& f : p.facets()) r = std::min(r, f.offset);
  if (p.facets().empty() || !(r > eps)) {
    throw Error(Errc::origin_outside, "origin is not interior to the polytope");
  }
  return r;
}

bool ball_contained_in(const Polytope& p, double radius) { return inner_radius(p) >= radius; }

}  // namespace gpl::geom
