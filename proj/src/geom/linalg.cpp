#include "gpl/geom/linalg.hpp"

#include <cmath>

#include "gpl/error.hpp"

namespace gpl::geom {

double factorial(int k) {
  double f = 1.0;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

std::optional<Vector> hyperplane_normal(std::span<const Vector> points, double scale) {
  const int d = static_cast<int>(points.size());
  if (d < 2 || points.front().size() != d) {
    throw Error(Errc::dimension_mismatch, "hyperplane needs exactly d points in R^d");
  }
  Vector normal(d);
  if (d == 2) {
    const Vector e = points[1] - points[0];
    normal << e[1], -e[0];
  } else if (d == 3) {
    const Eigen::Vector3d a = points[1] - points[0];
    const Eigen::Vector3d b = points[2] - points[0];
    normal = a.cross(b);
  } else {
    Matrix edges(d - 1, d);
    for (int i = 1; i < d; ++i) edges.row(i - 1) = (points[i] - points[0]).transpose();
    Matrix minor(d - 1, d - 1);
    for (int k = 0; k < d; ++k) {
      for (int c = 0, cc = 0; c < d; ++c) {
        if (c == k) continue;
        minor.col(cc++) = edges.col(c);
      }
      const double det = minor.determinant();
      normal[k] = (k % 2 == 0) ? det : -det;
    }
  }
  const double len = normal.norm();
  if (!(len > kEpsGeom * std::pow(scale, d - 1))) return std::nullopt;
  return Vector(normal / len);
}

std::optional<Hyperplane> affine_hyperplane(std::span<const Vector> points, double scale) {
  auto normal = hyperplane_normal(points, scale);
  if (!normal) return std::nullopt;
  return Hyperplane{*normal, normal->dot(points[0])};
}

double simplex_volume(const Vector& base, std::span<const Vector> vertices) {
  const int d = static_cast<int>(base.size());
  if (d == 2) {
    const double ax = vertices[0][0] - base[0], ay = vertices[0][1] - base[1];
    const double bx = vertices[1][0] - base[0], by = vertices[1][1] - base[1];
    return std::abs(ax * by - ay * bx) / 2.0;
  }
  Matrix m(d, d);
  for (int i = 0; i < d; ++i) m.col(i) = vertices[static_cast<std::size_t>(i)] - base;
  return std::abs(m.determinant()) / factorial(d);
}

double simplex_measure(std::span<const Vector> vertices) {
  const int k = static_cast<int>(vertices.size()) - 1;
  if (k <= 0) return k == 0 ? 1.0 : 0.0;
  const int d = static_cast<int>(vertices.front().size());
  Matrix edges(d, k);
  for (int i = 0; i < k; ++i) edges.col(i) = vertices[static_cast<std::size_t>(i) + 1] - vertices[0];
  const Matrix gram = edges.transpose() * edges;
  const double det = gram.determinant();
  return std::sqrt(std::max(det, 0.0)) / factorial(k);
}

std::vector<Vector> orthonormal_complement(const Vector& direction) {
  const int d = static_cast<int>(direction.size());
  const double len = direction.norm();
  if (!(len > 0.0)) throw Error(Errc::bad_frame, "zero direction has no complement");
  // Householder reflection taking the direction to a multiple of e_0; its
  // remaining columns span the complement.
  Vector u = direction / len;
  const double sign = u[0] >= 0.0 ? 1.0 : -1.0;
  Vector v = u;
  v[0] += sign;
  const double vv = v.squaredNorm();
  std::vector<Vector> basis;
  basis.reserve(static_cast<std::size_t>(d - 1));
  for (int k = 1; k < d; ++k) {
    Vector col = -2.0 * v[k] / vv * v;
    col[k] += 1.0;
    basis.push_back(col);
  }
  return basis;
}

}  // namespace gpl::geom
