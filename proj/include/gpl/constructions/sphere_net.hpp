#pragma once

#include <cstddef>
#include <vector>

#include "json.hpp"
#include "gpl/geom/types.hpp"
#include "gpl/sampling/rng.hpp"

namespace gpl::constructions {

/// Points on S(radius) with pairwise distance >= min_sep, maximal up to the
/// probe certificate.
struct SphereNet {
  int dim = 2;
  double radius = 1.0;
  double min_sep = 1.0;
  std::vector<geom::Vector> centers;

  std::size_t size() const noexcept { return centers.size(); }
};

struct NetOptions {
  /// Stop after this many consecutive rejections per current center.
  std::size_t rejections_per_center = 200;
  /// Uniform probes in the final pass; uncovered probes become centers.
  std::size_t probes = 100000;
};

/// Greedy net: uniform sphere points are accepted when they keep the
/// separation, until K = rejections_per_center * max(1, m) consecutive
/// rejections; a probe pass then inserts any probe still min_sep away from
/// every center.
SphereNet build_net(int d, double radius, double min_sep, sampling::RngStream& rng, const NetOptions& opts = {});

/// Smallest pairwise distance between centers (+infinity for m < 2).
double min_pairwise_distance(const SphereNet& net);

/// Number of `probes` uniform sphere points farther than min_sep from every
/// center.
std::size_t uncovered_probes(const SphereNet& net, std::size_t probes, sampling::RngStream& rng);

nlohmann::json to_json(const SphereNet& net);

}  // namespace gpl::constructions
