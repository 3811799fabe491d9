#pragma once

#include <cstddef>
#include <span>

#include "gpl/sampling/rng.hpp"

namespace gpl::stats {

/// Distances between the law of Y (sample a) and of Y' (sample b):
/// eps1 = |mu' - mu| / sigma', eps2 = |sigma' - sigma| / sigma' and
/// eps3 = sup_t |P(Y' >= t) - P(Y >= t)|, with bootstrap standard errors.
struct CouplingEstimate {
  double eps1 = 0.0;
  double eps2 = 0.0;
  double eps3 = 0.0;
  double eps1_se = 0.0;
  double eps2_se = 0.0;
  double eps3_se = 0.0;
  /// Fraction of index-aligned pairs with a == b exactly (0 when the sizes
  /// differ).
  double equal_fraction = 0.0;
};

/// Equal-size samples are treated as paired runs and resampled jointly.
/// Throws Error(degenerate_variance) if b has zero variance and
/// Error(config_invalid) if a sample is empty.
CouplingEstimate coupling_estimate(std::span<const double> a, std::span<const double> b, sampling::RngStream& rng,
                                   std::size_t resamples = 1000);

}  // namespace gpl::stats
