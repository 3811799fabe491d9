#include "gpl/sampling/samplers.hpp"

#include <cmath>

#include "gpl/error.hpp"
#include "gpl/sampling/normal.hpp"

namespace gpl::sampling {

TruncatedGaussian make_truncated(int d, double R) {
  if (!(R > 0.0)) throw Error(Errc::rejection_stall, "truncation radius must be positive");
  return TruncatedGaussian{d, R, ball_head(R, d)};
}

geom::PointSet sample_gaussian(std::size_t n, int d, RngStream& rng) {
  geom::PointSet out(d, n);
  for (std::size_t i = 0; i < n; ++i) {
    auto p = out[i];
    for (auto& c : p) c = rng.normal();
  }
  return out;
}

geom::PointSet sample_truncated(std::size_t n, const TruncatedGaussian& t, RngStream& rng) {
  if (!(t.acceptance_prob >= 1e-6)) {
    throw Error(Errc::rejection_stall, "acceptance probability below 1e-6; truncation radius is too small");
  }
  const double r2 = t.R * t.R;
  geom::PointSet out(t.d, n);
  for (std::size_t i = 0; i < n; ++i) {
    auto p = out[i];
    double s;
    do {
      s = 0.0;
      for (auto& c : p) {
        c = rng.normal();
        s += c * c;
      }
    } while (s > r2);
  }
  return out;
}

std::uint64_t sample_poisson_count(double mean, RngStream& rng) {
  if (!(mean > 0.0)) throw Error(Errc::config_invalid, "Poisson mean must be positive");
  if (mean < 30.0) {
    const double u = rng.uniform();
    double p = std::exp(-mean);
    double cdf = p;
    std::uint64_t k = 0;
    while (u > cdf && k < 1000) {
      ++k;
      p *= mean / static_cast<double>(k);
      cdf += p;
    }
    return k;
  }
  const double slam = std::sqrt(mean);
  const double loglam = std::log(mean);
  const double b = 0.931 + 2.53 * slam;
  const double a = -0.059 + 0.02483 * b;
  const double invalpha = 1.1239 + 1.1328 / (b - 3.4);
  const double vr = 0.9277 - 3.6224 / (b - 2.0);
  while (true) {
    const double u = rng.uniform() - 0.5;
    const double v = rng.uniform();
    const double us = 0.5 - std::abs(u);
    const double k = std::floor((2.0 * a / us + b) * u + mean + 0.43);
    if (us >= 0.07 && v <= vr) return static_cast<std::uint64_t>(k);
    if (k < 0.0 || (us < 0.013 && v > us)) continue;
    if (std::log(v) + std::log(invalpha) - std::log(a / (us * us) + b) <= -mean + k * loglam - std::lgamma(k + 1.0)) {
      return static_cast<std::uint64_t>(k);
    }
  }
}

geom::Vector uniform_on_sphere(int d, double radius, RngStream& rng) {
  geom::Vector v(d);
  double n2;
  do {
    for (int k = 0; k < d; ++k) v[k] = rng.normal();
    n2 = v.squaredNorm();
  } while (n2 == 0.0);
  return v * (radius / std::sqrt(n2));
}

}  // namespace gpl::sampling
