#include "gpl/stats/summary.hpp"

#include <boost/math/special_functions/beta.hpp>
#include <cmath>

#include "gpl/error.hpp"

namespace gpl::stats {

double SampleSummary::sd() const { return std::sqrt(variance); }

SampleSummary summarize(std::span<const double> values) {
  if (values.empty()) throw Error(Errc::config_invalid, "summary of an empty sample");
  SampleSummary s;
  s.count = values.size();
  const double n = static_cast<double>(s.count);
  double sum = 0.0;
  for (double v : values) sum += v;
  s.mean = sum / n;
  double m2 = 0.0, m4 = 0.0;
  for (double v : values) {
    const double c = (v - s.mean) * (v - s.mean);
    m2 += c;
    m4 += c * c;
  }
  if (s.count < 2) return s;
  s.variance = m2 / (n - 1.0);
  m2 /= n;
  m4 /= n;
  s.variance_se = std::sqrt(std::max(0.0, (m4 - (n - 3.0) / (n - 1.0) * m2 * m2) / n));
  if (s.variance > 0.0) {
    const double sd = std::sqrt(s.variance);
    s.standardized.reserve(s.count);
    for (double v : values) s.standardized.push_back((v - s.mean) / sd);
  }
  return s;
}

Frequency event_frequency(std::size_t hits, std::size_t count) {
  if (count == 0) throw Error(Errc::config_invalid, "frequency of an empty flag sample");
  const double p = static_cast<double>(hits) / static_cast<double>(count);
  return {p, std::sqrt(p * (1.0 - p) / static_cast<double>(count)), hits, count};
}

Frequency event_frequency(const std::vector<bool>& flags) {
  std::size_t hits = 0;
  for (bool f : flags) hits += f ? 1 : 0;
  return event_frequency(hits, flags.size());
}

double clopper_pearson_upper(std::size_t hits, std::size_t count, double alpha) {
  if (hits >= count) return 1.0;
  return boost::math::ibeta_inv(static_cast<double>(hits) + 1.0, static_cast<double>(count - hits), 1.0 - alpha);
}

}  // namespace gpl::stats
