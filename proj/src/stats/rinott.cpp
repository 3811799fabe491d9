#include "gpl/stats/rinott.hpp"

#include <cmath>
#include <numbers>

#include "gpl/error.hpp"

namespace gpl::stats {

double rinott_bound(double D, double M, double m, double var_xi) {
  if (!(D > 0.0 && M > 0.0 && m > 0.0 && var_xi > 0.0)) {
    throw Error(Errc::non_positive_value, "Rinott bound needs positive inputs");
  }
  const double s = std::sqrt(var_xi);
  return D * M / s * (1.0 / std::sqrt(2.0 * std::numbers::pi) + 16.0 * std::sqrt(m * D) * M / s + 10.0 * m * D * M * M / var_xi);
}

double rinott_rate(int d, double n) {
  const double ln = std::log(n);
  return std::pow(std::log(ln), (d + 4) / 2.0) / std::pow(ln, (d - 1) / 4.0);
}

double rinott_at_orders(int d, double n) {
  const double ln = std::log(n);
  const double lln = std::log(ln);
  return rinott_bound(std::pow(lln, (d - 1) / 2.0), lln / std::sqrt(ln), std::pow(ln, (d - 1) / 2.0),
                      std::pow(ln, (d - 3) / 2.0));
}

}  // namespace gpl::stats
