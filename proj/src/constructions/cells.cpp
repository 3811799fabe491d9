#include "gpl/constructions/cells.hpp"

#include <algorithm>
#include <cmath>

#include "gpl/error.hpp"
#include "gpl/geom/predicates.hpp"
#include "gpl/sampling/normal.hpp"
#include "gpl/sampling/samplers.hpp"

namespace gpl::constructions {

bool CellPartition::in_annulus(const geom::Vector& x) const {
  const double n = x.norm();
  return n >= r && n <= R;
}

std::size_t CellPartition::cell_of(const geom::Vector& x) const {
  std::size_t best = 0;
  double best_d2 = (net.centers[0] - x).squaredNorm();
  for (std::size_t i = 1; i < net.centers.size(); ++i) {
    const double d2 = (net.centers[i] - x).squaredNorm();
    if (d2 < best_d2) {
      best_d2 = d2;
      best = i;
    }
  }
  return best;
}

std::size_t CellPartition::cell_of(std::span<const double> x) const {
  return cell_of(geom::Vector(geom::ConstPointRef(x.data(), static_cast<Eigen::Index>(x.size()))));
}

CellPartition build_cells(SphereNet net, double R, double r) {
  if (!(r < net.radius && net.radius < R)) throw Error(Errc::config_invalid, "cells need r < rho < R");
  if (net.centers.empty()) throw Error(Errc::config_invalid, "cells need a nonempty net");
  return CellPartition{std::move(net), R, r};
}

double annulus_volume(int d, double r, double outer) {
  return sampling::unit_ball_volume(d) * (std::pow(outer, d) - std::pow(r, d));
}

geom::Vector uniform_in_annulus(int d, double r, double outer, sampling::RngStream& rng) {
  const double lo = std::pow(r, d);
  const double hi = std::pow(outer, d);
  const double radius = std::pow(lo + rng.uniform() * (hi - lo), 1.0 / d);
  return sampling::uniform_on_sphere(d, radius, rng);
}

CellStats cell_statistics(const geom::Polytope& p, const CellPartition& cells, const geom::PointSet& sample,
                          int s, std::size_t darts, sampling::RngStream& rng) {
  bool contained = false;
  try {
    contained = geom::ball_contained_in(p, cells.r);
  } catch (const Error& e) {
    if (e.code() != Errc::origin_outside) throw;
  }
  if (!contained) throw Error(Errc::condition_b_violated, "B(r) is not inside the polytope");

  const std::size_t m = cells.size();
  CellStats out;
  out.s = s;
  out.xi.assign(m, 0.0);
  out.xi_se.assign(m, 0.0);
  out.face_numerators.assign(m, 0);
  out.point_counts.assign(m, 0);

  std::vector<std::size_t> vertex_cell;
  vertex_cell.reserve(p.vertices().size());
  for (const auto& v : p.vertices()) vertex_cell.push_back(cells.cell_of(v));
  if (s == 0) {
    for (std::size_t c : vertex_cell) ++out.face_numerators[c];
  } else {
    for (const auto& face : geom::enumerate_faces(p, s)) {
      for (int v : face) ++out.face_numerators[vertex_cell[static_cast<std::size_t>(v)]];
    }
  }

  for (std::size_t k = 0; k < sample.size(); ++k) {
    const geom::Vector x = sample.vector(k);
    if (cells.in_annulus(x)) ++out.point_counts[cells.cell_of(x)];
  }

  const int d = p.dim();
  const double outer = std::min(cells.R, p.max_vertex_norm());
  if (darts > 0 && outer > cells.r) {
    std::vector<std::size_t> hits(m, 0);
    std::size_t total = 0;
    for (std::size_t t = 0; t < darts; ++t) {
      const geom::Vector x = uniform_in_annulus(d, cells.r, outer, rng);
      if (!p.contains(x)) continue;
      ++hits[cells.cell_of(x)];
      ++total;
    }
    const double vol = annulus_volume(d, cells.r, outer);
    const double n = static_cast<double>(darts);
    auto estimate = [&](std::size_t h, double& value, double& se) {
      const double q = static_cast<double>(h) / n;
      value = vol * q;
      se = vol * std::sqrt(q * (1.0 - q) / n);
    };
    for (std::size_t i = 0; i < m; ++i) estimate(hits[i], out.xi[i], out.xi_se[i]);
    estimate(total, out.xi_sum, out.xi_sum_se);
  }
  return out;
}

std::size_t max_cell_load(const CellPartition& cells, const geom::PointSet& sample) {
  std::vector<std::size_t> load(cells.size(), 0);
  for (std::size_t k = 0; k < sample.size(); ++k) {
    const geom::Vector x = sample.vector(k);
    if (cells.in_annulus(x)) ++load[cells.cell_of(x)];
  }
  return load.empty() ? 0 : *std::max_element(load.begin(), load.end());
}

}  // namespace gpl::constructions
