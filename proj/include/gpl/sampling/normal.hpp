#pragma once

namespace gpl::sampling {

double std_normal_pdf(double t);

/// Phi(t).
double std_normal_cdf(double t);

/// Phi^{-1}(p) for p in (0, 1).
double std_normal_quantile(double p);

/// P(X . u > r) = 1 - Phi(r) for a unit vector u.
double halfspace_tail(double r);

/// P(|X| > r) for X standard normal in R^d: the chi-square survival
/// function with d degrees of freedom at r^2.
double ball_tail(double r, int d);

/// P(|X| <= r), computed without cancellation for small r.
double ball_head(double r, int d);

/// P(X . u >= offset and |X| <= R) for any unit u; R may be +infinity.
/// Requires 0 <= offset <= R. Throws Error(quadrature_failure) if the
/// integral cannot be resolved to about 1e-9 relative.
double cap_mass(double offset, double R, int d);

/// Volume of the unit ball in R^d.
double unit_ball_volume(int d);

}  // namespace gpl::sampling
