#include "gpl/stats/ks.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "gpl/error.hpp"
#include "gpl/sampling/normal.hpp"
#include "gpl/stats/summary.hpp"

namespace gpl::stats {

double ks_distance(std::span<const double> values) {
  if (values.size() < 2) throw Error(Errc::degenerate_variance, "KS distance needs at least two values");
  const SampleSummary s = summarize(values);
  if (s.standardized.empty()) throw Error(Errc::degenerate_variance, "all values are equal");
  std::vector<double> z = s.standardized;
  std::sort(z.begin(), z.end());
  const double n = static_cast<double>(z.size());
  double best = 0.0;
  for (std::size_t i = 0; i < z.size(); ++i) {
    // Ties share the upper step.
    std::size_t j = i;
    while (j + 1 < z.size() && z[j + 1] == z[i]) ++j;
    const double phi = sampling::std_normal_cdf(z[i]);
    best = std::max({best, phi - static_cast<double>(i) / n, static_cast<double>(j + 1) / n - phi});
    i = j;
  }
  return best;
}

double two_sample_ks(std::span<const double> a, std::span<const double> b) {
  if (a.empty() || b.empty()) throw Error(Errc::config_invalid, "two-sample KS needs nonempty samples");
  std::vector<double> x(a.begin(), a.end()), y(b.begin(), b.end());
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  const double nx = static_cast<double>(x.size()), ny = static_cast<double>(y.size());
  std::size_t i = 0, j = 0;
  double best = 0.0;
  while (i < x.size() || j < y.size()) {
    double t;
    if (j == y.size() || (i < x.size() && x[i] <= y[j])) {
      t = x[i];
    } else {
      t = y[j];
    }
    while (i < x.size() && x[i] == t) ++i;
    while (j < y.size() && y[j] == t) ++j;
    best = std::max(best, std::abs(static_cast<double>(i) / nx - static_cast<double>(j) / ny));
  }
  return best;
}

double kolmogorov_survival(double x) {
  if (x <= 0.0) return 1.0;
  if (x < 0.2) return 1.0;
  double sum = 0.0;
  for (int k = 1; k <= 100; ++k) {
    const double term = std::exp(-2.0 * k * k * x * x);
    sum += (k % 2 == 1 ? 1.0 : -1.0) * term;
    if (term < 1e-17) break;
  }
  return std::clamp(2.0 * sum, 0.0, 1.0);
}

double ks_critical(std::size_t n, double alpha) {
  double lo = 0.2, hi = 5.0;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    (kolmogorov_survival(mid) > alpha ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi) / std::sqrt(static_cast<double>(n));
}

}  // namespace gpl::stats
