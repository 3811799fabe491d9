#pragma once

#include "gpl/geom/types.hpp"
#include "gpl/models/model.hpp"
#include "gpl/models/radii.hpp"
#include "gpl/sampling/rng.hpp"

namespace gpl::constructions {

/// One draw of the model described by `spec`; true if B(r_sandwich) lies inside the hull.
/// Throws Error(config_invalid) for the untruncated Gaussian model.
bool sandwich_trial(const models::ModelSpec& spec, const models::RadiiBundle& radii, const sampling::RngStream& rng);

/// The cap {x : x . u >= rho} cut by B(sqrt(rho^2 + c1^2)) around the unit
/// direction u.
struct SandwichCap {
  geom::Vector direction;
  double offset = 0.0;
  double radius = 0.0;

  bool contains(const geom::Vector& x) const;
};

SandwichCap sandwich_cap(const geom::Vector& center, double rho, double c1);

/// Probability mass of a sandwich cap under the truncated model on B(R).
double sandwich_cap_mass(const SandwichCap& cap, int d, double R);

}  // namespace gpl::constructions
