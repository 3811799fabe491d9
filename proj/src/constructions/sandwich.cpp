#include "gpl/constructions/sandwich.hpp"

#include <algorithm>
#include <cmath>

#include "gpl/error.hpp"
#include "gpl/sampling/normal.hpp"

namespace gpl::constructions {

bool sandwich_trial(const models::ModelSpec& spec, const models::RadiiBundle& radii, const sampling::RngStream& rng) {
  if (spec.kind == models::ModelKind::gaussian) {
    throw Error(Errc::config_invalid, "sandwich trials need the truncated or Poisson model");
  }
  return models::generate(spec, radii, rng).record.sandwich_ok;
}

bool SandwichCap::contains(const geom::Vector& x) const {
  return x.dot(direction) >= offset && x.squaredNorm() <= radius * radius;
}

SandwichCap sandwich_cap(const geom::Vector& center, double rho, double c1) {
  return SandwichCap{center / center.norm(), rho, std::sqrt(rho * rho + c1 * c1)};
}

double sandwich_cap_mass(const SandwichCap& cap, int d, double R) {
  const double outer = std::min(cap.radius, R);
  if (cap.offset >= outer) return 0.0;
  return sampling::cap_mass(cap.offset, outer, d) / sampling::ball_head(R, d);
}

}  // namespace gpl::constructions
