#include "gpl/geom/simplex.hpp"

#include <cmath>

#include "gpl/error.hpp"

namespace gpl::geom {

std::vector<Vector> regular_simplex(int k, double circumradius, const Vector& center,
                                    const std::vector<Vector>& frame) {
  if (k < 1 || static_cast<int>(frame.size()) != k) {
    throw Error(Errc::bad_frame, "frame must contain exactly k vectors");
  }
  if (!(circumradius > 0.0)) throw Error(Errc::bad_frame, "circumradius must be positive");
  for (int a = 0; a < k; ++a) {
    if (frame[static_cast<std::size_t>(a)].size() != center.size()) {
      throw Error(Errc::dimension_mismatch, "frame vector dimension differs from center");
    }
    for (int b = a; b < k; ++b) {
      const double g = frame[static_cast<std::size_t>(a)].dot(frame[static_cast<std::size_t>(b)]);
      if (std::abs(g - (a == b ? 1.0 : 0.0)) > kEpsGeom) {
        throw Error(Errc::bad_frame, "frame is not orthonormal");
      }
    }
  }
  // The centred standard basis of R^{k+1} written in the Helmert basis of
  // the sum-zero hyperplane: coordinate j of vertex i is h_j[i], where
  // h_j = (1, ..., 1, -j, 0, ..., 0) / sqrt(j (j+1)) with j leading ones.
  const double unit = std::sqrt(static_cast<double>(k) / (k + 1));
  const double scale = circumradius / unit;
  std::vector<Vector> out;
  out.reserve(static_cast<std::size_t>(k) + 1);
  for (int i = 0; i <= k; ++i) {
    Vector v = center;
    for (int j = 1; j <= k; ++j) {
      double h = 0.0;
      if (i < j) {
        h = 1.0;
      } else if (i == j) {
        h = -static_cast<double>(j);
      }
      if (h != 0.0) v += scale * h / std::sqrt(static_cast<double>(j) * (j + 1)) * frame[static_cast<std::size_t>(j - 1)];
    }
    out.push_back(v);
  }
  return out;
}

bool cone_contains(const Cone& c, const Simplex& s) {
  const int d = static_cast<int>(c.apex.size());
  if (static_cast<int>(c.generators.size()) != d) {
    throw Error(Errc::singular_generators, "cone needs d generators");
  }
  Matrix g(d, d);
  for (int j = 0; j < d; ++j) {
    const double len = c.generators[static_cast<std::size_t>(j)].norm();
    if (!(len > 0.0)) throw Error(Errc::singular_generators, "zero generator");
    g.col(j) = c.generators[static_cast<std::size_t>(j)] / len;
  }
  Eigen::PartialPivLU<Matrix> lu(g);
  if (!(std::abs(lu.determinant()) > kEpsGeom)) {
    throw Error(Errc::singular_generators, "generators are linearly dependent");
  }
  for (const auto& v : s.vertices) {
    const Vector lambda = lu.solve(Vector(v - c.apex));
    const double tol = kEpsGeom * std::max(1.0, (v - c.apex).norm());
    if ((lambda.array() < -tol).any()) return false;
  }
  return true;
}

}  // namespace gpl::geom
