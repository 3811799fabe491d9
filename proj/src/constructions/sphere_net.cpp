#include "gpl/constructions/sphere_net.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <unordered_map>

#include "gpl/error.hpp"
#include "gpl/sampling/samplers.hpp"

namespace gpl::constructions {

namespace {

// Spatial hash with cells of side min_sep, so every center within min_sep
// of a query lies in the 3^d surrounding cells. Used for d <= 4; above
// that a linear scan is cheaper than 3^d lookups.
class CenterIndex {
 public:
  CenterIndex(int d, double cell) : d_(d), cell_(cell), hashed_(d <= 4) {}

  bool far_from_all(const geom::Vector& x, const std::vector<geom::Vector>& centers, double sep) const {
    const double sep2 = sep * sep;
    if (!hashed_) {
      for (const auto& c : centers) {
        if ((c - x).squaredNorm() < sep2) return false;
      }
      return true;
    }
    std::array<long, geom::kMaxDim> base{};
    for (int k = 0; k < d_; ++k) base[static_cast<std::size_t>(k)] = coord(x[k]);
    const int combos = static_cast<int>(std::pow(3, d_));
    for (int code = 0; code < combos; ++code) {
      std::array<long, geom::kMaxDim> key = base;
      int rest = code;
      for (int k = 0; k < d_; ++k) {
        key[static_cast<std::size_t>(k)] += rest % 3 - 1;
        rest /= 3;
      }
      const auto it = cells_.find(hash(key));
      if (it == cells_.end()) continue;
      for (int idx : it->second) {
        if ((centers[static_cast<std::size_t>(idx)] - x).squaredNorm() < sep2) return false;
      }
    }
    return true;
  }

  void insert(const geom::Vector& x, int idx) {
    if (!hashed_) return;
    std::array<long, geom::kMaxDim> key{};
    for (int k = 0; k < d_; ++k) key[static_cast<std::size_t>(k)] = coord(x[k]);
    cells_[hash(key)].push_back(idx);
  }

 private:
  long coord(double v) const { return static_cast<long>(std::floor(v / cell_)); }

  std::uint64_t hash(const std::array<long, geom::kMaxDim>& key) const {
    std::uint64_t h = 1469598103934665603ull;
    for (int k = 0; k < d_; ++k) {
      h ^= static_cast<std::uint64_t>(key[static_cast<std::size_t>(k)] + (1L << 20));
      h *= 1099511628211ull;
    }
    return h;
  }

  int d_;
  double cell_;
  bool hashed_;
  // Distinct keys may collide in the hash; a collision only adds centers to
  // the scan, never hides one.
  std::unordered_map<std::uint64_t, std::vector<int>> cells_;
};

}  // namespace

SphereNet build_net(int d, double radius, double min_sep, sampling::RngStream& rng, const NetOptions& opts) {
  if (!(min_sep > 0.0) || !(radius > 0.0)) throw Error(Errc::config_invalid, "net needs positive radius and separation");
  SphereNet net{d, radius, min_sep, {}};
  CenterIndex index(d, min_sep);
  auto try_insert = [&](const geom::Vector& x) {
    if (!index.far_from_all(x, net.centers, min_sep)) return false;
    index.insert(x, static_cast<int>(net.centers.size()));
    net.centers.push_back(x);
    return true;
  };

  std::size_t streak = 0;
  while (streak < opts.rejections_per_center * std::max<std::size_t>(1, net.centers.size())) {
    if (try_insert(sampling::uniform_on_sphere(d, radius, rng))) {
      streak = 0;
    } else {
      ++streak;
    }
  }
  for (std::size_t p = 0; p < opts.probes; ++p) try_insert(sampling::uniform_on_sphere(d, radius, rng));
  return net;
}

double min_pairwise_distance(const SphereNet& net) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t a = 0; a < net.centers.size(); ++a) {
    for (std::size_t b = a + 1; b < net.centers.size(); ++b) best = std::min(best, (net.centers[a] - net.centers[b]).norm());
  }
  return best;
}

std::size_t uncovered_probes(const SphereNet& net, std::size_t probes, sampling::RngStream& rng) {
  CenterIndex index(net.dim, net.min_sep);
  for (std::size_t i = 0; i < net.centers.size(); ++i) index.insert(net.centers[i], static_cast<int>(i));
  std::size_t bad = 0;
  for (std::size_t p = 0; p < probes; ++p) {
    bad += index.far_from_all(sampling::uniform_on_sphere(net.dim, net.radius, rng), net.centers, net.min_sep) ? 1 : 0;
  }
  return bad;
}

nlohmann::json to_json(const SphereNet& net) {
  nlohmann::json centers = nlohmann::json::array();
  for (const auto& c : net.centers) centers.push_back(std::vector<double>(c.data(), c.data() + c.size()));
  return {{"dim", net.dim}, {"radius", net.radius}, {"min_sep", net.min_sep}, {"centers", centers}};
}

}  // namespace gpl::constructions
