#pragma once

#include <cstddef>
#include <vector>

#include "gpl/constructions/sphere_net.hpp"
#include "gpl/geom/types.hpp"
#include "gpl/sampling/rng.hpp"

namespace gpl::constructions {

/// The simplex gadget attached to one net center y on S(r).
///
/// vertices[0] is the apex (1 + 1/r^2) y; vertices[1..d] form a regular
/// (d-1)-simplex of circumradius sqrt(2) centred at y inside the
/// hyperplane {z : z . y = r^2}. The shrunken copy with index j is the
/// image of the simplex under the homothety about vertices[j] with factor
/// b2. The halfspace H^+ is {x : x . y/|y| >= r}; for j >= 1, H^j lies
/// beyond the hyperplane through the d tangent points
/// vertices[k] + b2 (vertices[j] - vertices[k]), k != j, on the side
/// away from the origin.
struct FamilyMember {
  double b2 = 0.05;
  geom::Vector center;
  std::vector<geom::Vector> vertices;
  geom::Hyperplane h_plus;
  std::vector<geom::Hyperplane> h;  // h[j-1] is H^j
  geom::Matrix barycentric;         // maps x - vertices[0] to coordinates 1..d

  /// Barycentric coordinates (lambda_0..lambda_d) of x in the simplex.
  std::vector<double> coordinates(const geom::Vector& x) const;
  bool in_simplex(const geom::Vector& x) const;
  /// Membership in the shrunken copy with index j.
  bool in_shrunken(const geom::Vector& x, int j) const;
  std::vector<geom::Vector> shrunken_vertices(int j, double b2) const;
  /// True if x lies in H^+ or in some H^j.
  bool in_forbidden_union(const geom::Vector& x) const;
};

struct SimplexFamily {
  int dim = 2;
  double r = 1.0;
  double b2 = 0.05;
  std::vector<FamilyMember> members;
};

/// Throws Error(frame_construction_failure) if a frame cannot be built or a
/// tangent hyperplane is degenerate, and Error(config_invalid) unless
/// 0 < b2 < 1 and the net lies on S(r).
SimplexFamily build_simplex_family(const SphereNet& net, double r, double b2);

/// Gaussian mass of every forbidden halfspace: row i holds H^+ first, then
/// H^1..H^d.
std::vector<std::vector<double>> halfspace_family_mass(const SimplexFamily& fam);

/// Uniform point in the convex hull of the d+1 given vertices.
geom::Vector uniform_in_simplex(const std::vector<geom::Vector>& vertices, sampling::RngStream& rng);

/// Gaussian mass of a simplex with standard error: volume times the mean
/// density at uniform points.
struct MassEstimate {
  double value = 0.0;
  double se = 0.0;
};
MassEstimate simplex_gaussian_mass(const std::vector<geom::Vector>& vertices, std::size_t samples,
                                   sampling::RngStream& rng);

/// Gaussian mass of H^+ union H^1..H^d by mixture sampling over the
/// halfspaces, weighting each draw by the number of halfspaces that hold it.
MassEstimate forbidden_union_mass(const FamilyMember& m, std::size_t samples, sampling::RngStream& rng);

/// True iff exactly k_required sample points lie in the shrunken copy 0,
/// exactly one in each shrunken copy 1..d, and no other sample point lies
/// in H^+ or any H^j.
bool detect_event_A(const std::vector<geom::Vector>& sample, const SimplexFamily& fam, std::size_t i,
                    int k_required);
bool detect_event_A(const geom::PointSet& sample, const SimplexFamily& fam, std::size_t i, int k_required);

/// P(A_i) for n i.i.d. standard normal points, from the masses of the
/// shrunken copies and of the forbidden union.
MassEstimate event_A_probability(const SimplexFamily& fam, std::size_t i, double n, int k_required,
                                 std::size_t samples, sampling::RngStream& rng);

/// Cone with apex z[0] spanned by z[j] - z[0], j = 1..d.
geom::Cone construction_cone(const std::vector<geom::Vector>& z);

}  // namespace gpl::constructions
