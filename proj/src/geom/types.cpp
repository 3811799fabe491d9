#include "gpl/geom/types.hpp"

#include <cmath>

#include "gpl/error.hpp"

namespace gpl::geom {

PointSet::PointSet(int dim, std::vector<double> coords) : dim_(dim), coords_(std::move(coords)) {
  if (dim_ <= 0 || coords_.size() % static_cast<std::size_t>(dim_) != 0) {
    throw Error(Errc::dimension_mismatch, "coordinate count is not a multiple of the dimension");
  }
}

PointSet PointSet::from_vectors(const std::vector<Vector>& points) {
  if (points.empty()) return PointSet();
  PointSet out(static_cast<int>(points.front().size()));
  out.reserve(points.size());
  for (const auto& p : points) out.push_back(p);
  return out;
}

void PointSet::push_back(std::span<const double> p) {
  if (static_cast<int>(p.size()) != dim_) {
    throw Error(Errc::dimension_mismatch, "point dimension differs from point set dimension");
  }
  coords_.insert(coords_.end(), p.begin(), p.end());
}

void PointSet::push_back(const Vector& p) {
  push_back(std::span<const double>(p.data(), static_cast<std::size_t>(p.size())));
}

double PointSet::scale() const noexcept {
  double s = 0.0;
  for (double c : coords_) s = std::max(s, std::abs(c));
  return s > 0.0 ? s : 1.0;
}

Vector Simplex::centroid() const {
  Vector c = Vector::Zero(ambient_dim());
  for (const auto& v : vertices) c += v;
  return c / static_cast<double>(vertices.size());
}

Vector make_vector(std::initializer_list<double> coords) {
  Vector v(static_cast<Eigen::Index>(coords.size()));
  Eigen::Index i = 0;
  for (double c : coords) v[i++] = c;
  return v;
}

}  // namespace gpl::geom
