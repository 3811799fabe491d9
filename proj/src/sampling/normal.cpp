#include "gpl/sampling/normal.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/special_functions/erf.hpp>

#include "gpl/error.hpp"

namespace gpl::sampling {

double std_normal_pdf(double t) { return std::exp(-0.5 * t * t) / std::sqrt(2.0 * std::numbers::pi); }

double std_normal_cdf(double t) { return 0.5 * std::erfc(-t / std::numbers::sqrt2); }

double std_normal_quantile(double p) { return -std::numbers::sqrt2 * boost::math::erfc_inv(2.0 * p); }

double halfspace_tail(double r) { return 0.5 * std::erfc(r / std::numbers::sqrt2); }

namespace {

// x^a e^{-x} / Gamma(a+1), the gap between consecutive regularised
// incomplete gamma functions Q(a+1, x) - Q(a, x).
double gamma_step(double a, double x) { return std::exp(a * std::log(x) - x - std::lgamma(a + 1.0)); }

// Upper regularised gamma Q(d/2, x) for integer d by the finite recurrence
// from Q(1, x) = e^{-x} or Q(1/2, x) = erfc(sqrt x). Every term is positive
// so there is no cancellation, even deep in the tail.
double upper_gamma_half_integer(int d, double x) {
  double a = (d % 2 == 0) ? 1.0 : 0.5;
  double q = (d % 2 == 0) ? std::exp(-x) : std::erfc(std::sqrt(x));
  while (a < 0.5 * d) {
    q += gamma_step(a, x);
    a += 1.0;
  }
  return q;
}

// Lower regularised gamma P(a, x) by its power series, accurate for x < a + 1.
double lower_gamma_series(double a, double x) {
  double term = 1.0, sum = 1.0;
  for (int n = 1; n < 500; ++n) {
    term *= x / (a + n);
    sum += term;
    if (term < sum * 1e-17) break;
  }
  return gamma_step(a, x) * sum;
}

}  // namespace

double ball_tail(double r, int d) {
  if (d < 1) throw Error(Errc::invalid_dimension, "ball_tail needs d >= 1");
  if (!(r > 0.0)) return 1.0;
  if (std::isinf(r)) return 0.0;
  const double x = 0.5 * r * r;
  if (x < 0.5 * d + 1.0) return 1.0 - lower_gamma_series(0.5 * d, x);
  return upper_gamma_half_integer(d, x);
}

double ball_head(double r, int d) {
  if (d < 1) throw Error(Errc::invalid_dimension, "ball_head needs d >= 1");
  if (!(r > 0.0)) return 0.0;
  if (std::isinf(r)) return 1.0;
  const double x = 0.5 * r * r;
  if (x < 0.5 * d + 1.0) return lower_gamma_series(0.5 * d, x);
  return 1.0 - upper_gamma_half_integer(d, x);
}

double cap_mass(double offset, double R, int d) {
  if (d < 1) throw Error(Errc::invalid_dimension, "cap_mass needs d >= 1");
  if (offset < 0.0 || offset > R) throw Error(Errc::quadrature_failure, "cap_mass needs 0 <= offset <= R");
  if (std::isinf(R)) return halfspace_tail(offset);
  if (d == 1) return halfspace_tail(offset) - halfspace_tail(R);
  if (offset == R) return 0.0;
  // Integrate over the axis coordinate t; the remaining d-1 coordinates must
  // fall in a ball of radius sqrt(R^2 - t^2). Beyond offset + 40 the normal
  // density is below any relative tolerance.
  const double upper = std::min(R, offset + 40.0);
  auto integrand = [&](double t) {
    const double s2 = std::max(0.0, (R - t) * (R + t));
    return std_normal_pdf(t) * ball_head(std::sqrt(s2), d - 1);
  };
  boost::math::quadrature::tanh_sinh<double> integrator;
  double err = 0.0, l1 = 0.0;
  const double value = integrator.integrate(integrand, offset, upper, 1e-12, &err, &l1);
  if (!std::isfinite(value) || err > 1e-9 * std::abs(value) + std::numeric_limits<double>::min()) {
    throw Error(Errc::quadrature_failure, "cap_mass quadrature did not converge");
  }
  return value;
}

double unit_ball_volume(int d) {
  return std::pow(std::numbers::pi, 0.5 * d) / std::tgamma(0.5 * d + 1.0);
}

}  // namespace gpl::sampling
