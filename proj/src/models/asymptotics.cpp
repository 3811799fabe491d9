#include "gpl/models/asymptotics.hpp"

#include <cmath>
#include <numbers>

#include "gpl/error.hpp"
#include "gpl/geom/types.hpp"
#include "gpl/sampling/normal.hpp"
#include "gpl/sampling/rng.hpp"

namespace gpl::models {

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  double b = 1.0;
  for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

// The normal cone of a regular k-simplex at an s-face is spanned, inside
// the (k-s)-dimensional orthogonal complement of the face, by the
// directions to the remaining k-s vertices; those make pairwise angles
// arccos(1/(s+2)). The internal angle is the solid-angle fraction of
// that cone.
double internal_angle_regular_simplex(int s, int k, std::size_t samples, std::uint64_t seed) {
  if (s < 0 || s > k) throw Error(Errc::invalid_dimension, "need 0 <= s <= k");
  const int m = k - s;
  const double cos_a = 1.0 / (s + 2);
  const double pi = std::numbers::pi;
  switch (m) {
    case 0: return 1.0;
    case 1: return 0.5;
    case 2: return std::acos(cos_a) / (2.0 * pi);
    case 3: {
      const double A = std::acos(cos_a / (1.0 + cos_a));
      return (3.0 * A - pi) / (4.0 * pi);
    }
    default: break;
  }
  geom::Matrix gram = geom::Matrix::Constant(m, m, cos_a);
  gram.diagonal().setOnes();
  const geom::Matrix gen = Eigen::LLT<geom::Matrix>(gram).matrixL().transpose();  // columns are generators
  const Eigen::PartialPivLU<geom::Matrix> lu(gen);
  sampling::RngStream rng(seed, 0);
  std::size_t hits = 0;
  geom::Vector x(m);
  for (std::size_t t = 0; t < samples; ++t) {
    for (int i = 0; i < m; ++i) x[i] = rng.normal();
    const geom::Vector lambda = lu.solve(x);
    hits += (lambda.array() >= 0.0).all() ? 1 : 0;
  }
  return static_cast<double>(hits) / static_cast<double>(samples);
}

double expected_face_count_leading(int d, int s, double n) {
  const double beta = internal_angle_regular_simplex(s, d - 1);
  return std::pow(2.0, d) / std::sqrt(static_cast<double>(d)) * binomial(d, s + 1) * beta *
         std::pow(std::numbers::pi * std::log(n), 0.5 * (d - 1));
}

double expected_volume_leading(int d, double n) {
  return sampling::unit_ball_volume(d) * std::pow(2.0 * std::log(n), 0.5 * d);
}

}  // namespace gpl::models
