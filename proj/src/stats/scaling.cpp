#include "gpl/stats/scaling.hpp"

#include <algorithm>
#include <cmath>

#include "gpl/error.hpp"
#include "gpl/stats/summary.hpp"

namespace gpl::stats {

namespace {

struct Line {
  double slope = 0.0;
  double intercept = 0.0;
  double sxx = 0.0;
  double xbar = 0.0;
};

Line ols(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  double xbar = 0.0, ybar = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    xbar += x[i];
    ybar += y[i];
  }
  xbar /= n;
  ybar /= n;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - xbar) * (x[i] - xbar);
    sxy += (x[i] - xbar) * (y[i] - ybar);
  }
  const double slope = sxy / sxx;
  return {slope, ybar - slope * xbar, sxx, xbar};
}

double residual_sum_sq(const Line& l, const std::vector<double>& x, const std::vector<double>& y) {
  double rss = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double e = y[i] - l.intercept - l.slope * x[i];
    rss += e * e;
  }
  return rss;
}

double quantile(std::vector<double> v, double q) {
  std::sort(v.begin(), v.end());
  const double pos = q * static_cast<double>(v.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const std::size_t hi = std::min(lo + 1, v.size() - 1);
  return v[lo] + (pos - static_cast<double>(lo)) * (v[hi] - v[lo]);
}

std::vector<double> regressors(const std::vector<double>& ns) {
  if (ns.size() < 4) throw Error(Errc::config_invalid, "scaling fit needs at least four grid points");
  std::vector<double> x;
  for (std::size_t i = 0; i < ns.size(); ++i) {
    if (!(ns[i] > std::exp(1.0))) throw Error(Errc::config_invalid, "scaling fit needs n > e");
    for (std::size_t j = 0; j < i; ++j) {
      if (ns[j] == ns[i]) throw Error(Errc::config_invalid, "scaling fit needs distinct n");
    }
    x.push_back(std::log(std::log(ns[i])));
  }
  return x;
}

double log_value(double v) {
  if (!(v > 0.0)) throw Error(Errc::non_positive_value, "scaling fit needs positive values");
  return std::log(v);
}

}  // namespace

ScalingFit fit_scaling(const std::vector<ScalingPoint>& grid, sampling::RngStream& rng, std::size_t resamples,
                       double level) {
  std::vector<double> ns;
  for (const auto& p : grid) ns.push_back(p.n);
  const std::vector<double> x = regressors(ns);
  std::vector<double> y;
  for (const auto& p : grid) y.push_back(log_value(p.value));

  ScalingFit fit;
  fit.grid = grid;
  fit.level = level;
  fit.resamples = resamples;
  const Line line = ols(x, y);
  const double k = static_cast<double>(x.size());
  const double rss = residual_sum_sq(line, x, y);
  fit.slope = line.slope;
  fit.intercept = line.intercept;
  fit.residual_norm = std::sqrt(rss);
  fit.slope_se = std::sqrt(rss / (k - 2.0) / line.sxx);

  // Residuals rescaled by 1/sqrt(1 - h_i) and recentred have the error
  // variance; the studentized slope is then resampled.
  std::vector<double> adjusted;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double h = 1.0 / k + (x[i] - line.xbar) * (x[i] - line.xbar) / line.sxx;
    adjusted.push_back((y[i] - line.intercept - line.slope * x[i]) / std::sqrt(1.0 - h));
  }
  double centre = 0.0;
  for (double e : adjusted) centre += e / k;
  for (double& e : adjusted) e -= centre;

  if (fit.slope_se == 0.0 || resamples == 0) {
    fit.ci_low = fit.ci_high = fit.slope;
    return fit;
  }
  std::vector<double> t;
  t.reserve(resamples);
  std::vector<double> ystar(x.size());
  for (std::size_t b = 0; b < resamples; ++b) {
    for (std::size_t i = 0; i < x.size(); ++i) {
      ystar[i] = line.intercept + line.slope * x[i] + adjusted[rng.below(adjusted.size())];
    }
    const Line l = ols(x, ystar);
    const double se = std::sqrt(residual_sum_sq(l, x, ystar) / (k - 2.0) / l.sxx);
    if (se > 0.0) t.push_back((l.slope - line.slope) / se);
  }
  const double a = (1.0 - level) / 2.0;
  fit.ci_low = fit.slope - quantile(t, 1.0 - a) * fit.slope_se;
  fit.ci_high = fit.slope - quantile(t, a) * fit.slope_se;
  return fit;
}

ScalingFit fit_scaling_from_samples(const std::vector<double>& ns, const std::vector<std::vector<double>>& samples,
                                    SampleStatistic stat, sampling::RngStream& rng, std::size_t resamples,
                                    double level) {
  if (samples.size() != ns.size()) throw Error(Errc::config_invalid, "one sample per grid point is required");
  const std::vector<double> x = regressors(ns);
  auto statistic = [&](const std::vector<double>& v) {
    const SampleSummary s = summarize(v);
    return stat == SampleStatistic::mean ? s.mean : s.variance;
  };

  ScalingFit fit;
  fit.level = level;
  fit.resamples = resamples;
  std::vector<double> y;
  for (std::size_t i = 0; i < ns.size(); ++i) {
    const double v = statistic(samples[i]);
    fit.grid.push_back({ns[i], v});
    y.push_back(log_value(v));
  }
  const Line line = ols(x, y);
  const double rss = residual_sum_sq(line, x, y);
  fit.slope = line.slope;
  fit.intercept = line.intercept;
  fit.residual_norm = std::sqrt(rss);
  fit.slope_se = std::sqrt(rss / (static_cast<double>(x.size()) - 2.0) / line.sxx);

  std::vector<double> slopes;
  slopes.reserve(resamples);
  std::vector<double> ystar(x.size());
  std::vector<double> draw;
  for (std::size_t b = 0; b < resamples; ++b) {
    for (std::size_t i = 0; i < x.size(); ++i) {
      const auto& s = samples[i];
      draw.resize(s.size());
      for (auto& v : draw) v = s[rng.below(s.size())];
      ystar[i] = log_value(statistic(draw));
    }
    slopes.push_back(ols(x, ystar).slope);
  }
  if (slopes.empty()) {
    fit.ci_low = fit.ci_high = fit.slope;
  } else {
    const double a = (1.0 - level) / 2.0;
    fit.ci_low = quantile(slopes, a);
    fit.ci_high = quantile(slopes, 1.0 - a);
  }
  return fit;
}

}  // namespace gpl::stats
