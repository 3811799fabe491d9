#pragma once

#include <span>

namespace gpl::stats {

/// sup_t |F_emp(t) - Phi(t)| for the standardized sample. Throws
/// Error(degenerate_variance) if the sample has fewer than two values or
/// zero variance.
double ks_distance(std::span<const double> values);

/// sup_t |F_a(t) - F_b(t)|, evaluated at every jump of the pooled sample.
/// Throws Error(config_invalid) if either sample is empty.
double two_sample_ks(std::span<const double> a, std::span<const double> b);

/// P(K > x) for the limiting Kolmogorov distribution.
double kolmogorov_survival(double x);

/// Asymptotic one-sample critical value c(alpha) / sqrt(n).
double ks_critical(std::size_t n, double alpha);

}  // namespace gpl::stats
