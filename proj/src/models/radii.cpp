#include "gpl/models/radii.hpp"

#include <cmath>

#include "gpl/error.hpp"

namespace gpl::models {

namespace {

double loglog(double n) {
  if (!(n > std::exp(1.0))) throw Error(Errc::config_invalid, "n must exceed e so that ln ln n > 0");
  return std::log(std::log(n));
}

}  // namespace

double radius_R(double n, double c0) { return std::sqrt(2.0 * std::log(n) + c0 * loglog(n)); }

double radius_rho(double n, double c) {
  const double ll = loglog(n);
  if (!(c > 0.0)) throw Error(Errc::radicand_negative, "c must be positive");
  const double radicand = 2.0 * std::log(n) - ll - 2.0 * std::log(c * ll);
  if (!(radicand > 0.0)) throw Error(Errc::radicand_negative, "rho^2 is not positive for this n and c");
  return std::sqrt(radicand);
}

double radius_r_sandwich(double rho, double c1) {
  if (!(rho * rho > 5.0 * c1 * c1)) throw Error(Errc::rho_too_small, "need rho^2 > 5 c1^2");
  return rho - 5.0 * c1 * c1 / rho;
}

double radius_r_construction(double n) { return std::sqrt(2.0 * std::log(n) - loglog(n)); }

double exponent_C0(double c0, int d) { return 0.5 * c0 - 0.5 * (d - 2); }

RadiiBundle RadiiBundle::make(int d, double n, const Constants& k) {
  RadiiBundle b;
  b.c0 = k.c0_for(d);
  b.c = k.c;
  b.c1 = k.c1;
  b.b1 = k.b1;
  b.b2 = k.b2;
  b.R = radius_R(n, b.c0);
  b.rho = radius_rho(n, k.c);
  b.r_sandwich = radius_r_sandwich(b.rho, k.c1);
  b.r_construction = radius_r_construction(n);
  return b;
}

}  // namespace gpl::models
