#pragma once

#include <cstddef>
#include <cstdint>

namespace gpl::models {

/// Internal angle of the regular k-simplex at one of its s-faces, as a
/// fraction of the full solid angle. Exact for k - s <= 3; otherwise a
/// Monte Carlo estimate with `samples` Gaussian directions on a fixed seed.
double internal_angle_regular_simplex(int s, int k, std::size_t samples = 2'000'000, std::uint64_t seed = 1);

/// Leading term of E f_s for the Gaussian polytope:
/// 2^d / sqrt(d) * C(d, s+1) * beta_{s,d-1} * (pi ln n)^{(d-1)/2}.
double expected_face_count_leading(int d, int s, double n);

/// Leading term of E Vol: kappa_d (2 ln n)^{d/2}.
double expected_volume_leading(int d, double n);

double binomial(int n, int k);

}  // namespace gpl::models
