#pragma once

namespace gpl::models {

/// Tunable constants of the constructions. `c0 <= 0` means the default 100 d.
struct Constants {
  double c0 = 0.0;
  double c = 1.0;
  double c1 = 1.0;
  double b1 = 4.0;
  double b2 = 0.05;
  double c2 = 20.0;
  double A = 10.0;

  double c0_for(int d) const { return c0 > 0.0 ? c0 : 100.0 * d; }
};

/// sqrt(2 ln n + c0 ln ln n), the truncation radius.
double radius_R(double n, double c0);

/// sqrt(2 ln n - ln ln n - 2 ln(c ln ln n)), the radius of the sandwich
/// net. Throws Error(radicand_negative) if the radicand is not positive.
double radius_rho(double n, double c);

/// rho - 5 c1^2 / rho. Throws Error(rho_too_small) unless rho^2 > 5 c1^2.
double radius_r_sandwich(double rho, double c1);

/// sqrt(2 ln n - ln ln n), the sphere carrying the simplex construction.
double radius_r_construction(double n);

/// c0/2 - (d-2)/2, the exponent of the truncation loss.
double exponent_C0(double c0, int d);

struct RadiiBundle {
  double R = 0.0;
  double rho = 0.0;
  double r_sandwich = 0.0;
  double r_construction = 0.0;
  double c0 = 0.0;
  double c = 0.0;
  double c1 = 0.0;
  double b1 = 0.0;
  double b2 = 0.0;

  static RadiiBundle make(int d, double n, const Constants& k);
};

}  // namespace gpl::models
