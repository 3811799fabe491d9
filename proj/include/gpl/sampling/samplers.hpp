#pragma once

#include <cstdint>

#include "gpl/geom/types.hpp"
#include "gpl/sampling/rng.hpp"

namespace gpl::sampling {

/// The standard normal distribution conditioned on the ball B(R).
struct TruncatedGaussian {
  int d = 2;
  double R = 1.0;
  double acceptance_prob = 1.0;  // 1 - ball_tail(R, d)
};

TruncatedGaussian make_truncated(int d, double R);

/// n i.i.d. standard normal points in R^d.
geom::PointSet sample_gaussian(std::size_t n, int d, RngStream& rng);

/// n i.i.d. draws from the truncated normal, by rejection from the full
/// normal. Throws Error(rejection_stall) if the acceptance probability is
/// below 1e-6.
geom::PointSet sample_truncated(std::size_t n, const TruncatedGaussian& t, RngStream& rng);

/// A Poisson(mean) count: inversion below mean 30, Hormann's PTRS
/// transformed rejection above.
std::uint64_t sample_poisson_count(double mean, RngStream& rng);

/// A uniform point on the sphere of the given radius in R^d.
geom::Vector uniform_on_sphere(int d, double radius, RngStream& rng);

}  // namespace gpl::sampling
