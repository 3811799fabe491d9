#pragma once

#include <cstddef>
#include <vector>

#include "gpl/sampling/rng.hpp"

namespace gpl::stats {

struct ScalingPoint {
  double n = 0.0;
  double value = 0.0;
};

/// Least squares line through (ln ln n, ln value).
struct ScalingFit {
  std::vector<ScalingPoint> grid;
  double slope = 0.0;
  double intercept = 0.0;
  double residual_norm = 0.0;
  double slope_se = 0.0;  // classical OLS standard error
  double ci_low = 0.0;
  double ci_high = 0.0;
  double level = 0.95;
  std::size_t resamples = 0;

  bool covers(double s) const { return ci_low <= s && s <= ci_high; }
};

/// OLS fit with a residual bootstrap-t interval (leverage-corrected residuals).
/// Throws Error(non_positive_value) for values <= 0 and Error(config_invalid)
/// for fewer than four points, repeated n or n <= e.
ScalingFit fit_scaling(const std::vector<ScalingPoint>& grid, sampling::RngStream& rng, std::size_t resamples = 1000,
                       double level = 0.95);

enum class SampleStatistic { mean, variance };

/// Fit of a per-n sample statistic; the interval comes from resampling the
/// trials within each n and refitting (percentile bootstrap).
ScalingFit fit_scaling_from_samples(const std::vector<double>& ns, const std::vector<std::vector<double>>& samples,
                                    SampleStatistic stat, sampling::RngStream& rng, std::size_t resamples = 1000,
                                    double level = 0.95);

}  // namespace gpl::stats
