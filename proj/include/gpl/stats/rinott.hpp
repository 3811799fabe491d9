#pragma once

namespace gpl::stats {

/// D M / sqrt(v) (1/sqrt(2 pi) + 16 sqrt(m D) M / sqrt(v) + 10 m D M^2 / v),
/// the normal-approximation error bound for a sum of m bounded variables
/// (|xi| <= M) with a dependency graph of maximal degree D and total
/// variance v. Throws Error(non_positive_value) unless all inputs are > 0.
double rinott_bound(double D, double M, double m, double var_xi);

/// (ln ln n)^{(d+4)/2} / (ln n)^{(d-1)/4}.
double rinott_rate(int d, double n);

/// The bound evaluated at the orders m = (ln n)^{(d-1)/2},
/// D = (ln ln n)^{(d-1)/2}, M = ln ln n / sqrt(ln n),
/// var = (ln n)^{(d-3)/2}, all with unit constants.
double rinott_at_orders(int d, double n);

}  // namespace gpl::stats
