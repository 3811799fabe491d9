#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace gpl::stats {

struct SampleSummary {
  std::size_t count = 0;
  double mean = 0.0;
  double variance = 0.0;  // unbiased; 0 for a single value
  /// Standard error of the unbiased variance, from the fourth central moment.
  double variance_se = 0.0;
  /// (x - mean) / sd, empty when the variance is 0.
  std::vector<double> standardized;

  double sd() const;
};

/// Throws Error(config_invalid) for an empty sample.
SampleSummary summarize(std::span<const double> values);

struct Frequency {
  double estimate = 0.0;
  double se = 0.0;
  std::size_t hits = 0;
  std::size_t count = 0;
};

/// Mean and binomial standard error of a flag sample. Throws
/// Error(config_invalid) when empty.
Frequency event_frequency(const std::vector<bool>& flags);
Frequency event_frequency(std::size_t hits, std::size_t count);

/// Exact one-sided upper confidence bound for a binomial proportion.
double clopper_pearson_upper(std::size_t hits, std::size_t count, double alpha);

}  // namespace gpl::stats
