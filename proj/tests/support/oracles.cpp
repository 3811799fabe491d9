#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <Eigen/Dense>

namespace gpl::oracle {

using geom::PointSet;
using geom::Vector;

std::vector<OracleFacet> brute_force_facets(const PointSet& pts) {
  const int d = pts.dim();
  const std::size_t n = pts.size();
  std::vector<OracleFacet> out;
  std::vector<std::size_t> pick(static_cast<std::size_t>(d));
  std::iota(pick.begin(), pick.end(), 0);
  while (true) {
    // Normal as the null vector of the (d-1) x d edge matrix.
    Eigen::MatrixXd edges(d - 1, d);
    const Eigen::VectorXd base = pts.map(pick[0]);
    for (int i = 1; i < d; ++i) edges.row(i - 1) = (pts.map(pick[static_cast<std::size_t>(i)]) - base).transpose();
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(edges, Eigen::ComputeFullV);
    Eigen::VectorXd normal = svd.matrixV().col(d - 1);
    double offset = normal.dot(base);
    int above = 0, below = 0;
    for (std::size_t p = 0; p < n; ++p) {
      if (std::find(pick.begin(), pick.end(), p) != pick.end()) continue;
      const double s = normal.dot(pts.map(p)) - offset;
      if (s > 1e-10) ++above;
      if (s < -1e-10) ++below;
    }
    if (above == 0 || below == 0) {
      if (above > 0 || (above == 0 && below == 0)) {
        normal = -normal;
        offset = -offset;
      }
      out.push_back({pick, Vector(normal), offset});
    }
    int i = d - 1;
    while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - static_cast<std::size_t>(d - i)) --i;
    if (i < 0) break;
    ++pick[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < d; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

std::vector<std::vector<std::size_t>> facet_tuples(const std::vector<OracleFacet>& facets) {
  std::vector<std::vector<std::size_t>> out;
  for (const auto& f : facets) out.push_back(f.indices);
  std::sort(out.begin(), out.end());
  return out;
}

std::pair<double, double> hit_or_miss_volume(const PointSet& pts, const std::vector<OracleFacet>& facets,
                                             std::size_t darts, std::mt19937_64& rng) {
  const int d = pts.dim();
  Eigen::VectorXd lo = pts.map(0), hi = pts.map(0);
  for (std::size_t i = 1; i < pts.size(); ++i) {
    lo = lo.cwiseMin(pts.map(i));
    hi = hi.cwiseMax(pts.map(i));
  }
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::size_t hits = 0;
  Eigen::VectorXd x(d);
  for (std::size_t t = 0; t < darts; ++t) {
    for (int k = 0; k < d; ++k) x[k] = lo[k] + u(rng) * (hi[k] - lo[k]);
    bool inside = true;
    for (const auto& f : facets) {
      if (f.normal.dot(x) > f.offset) {
        inside = false;
        break;
      }
    }
    hits += inside ? 1 : 0;
  }
  const double box = (hi - lo).prod();
  const double p = static_cast<double>(hits) / static_cast<double>(darts);
  return {box * p, box * std::sqrt(p * (1.0 - p) / static_cast<double>(darts))};
}

double planar_hull_perimeter(const PointSet& pts) {
  std::vector<std::pair<double, double>> p;
  for (std::size_t i = 0; i < pts.size(); ++i) p.emplace_back(pts[i][0], pts[i][1]);
  std::sort(p.begin(), p.end());
  auto cross = [](auto o, auto a, auto b) {
    return (a.first - o.first) * (b.second - o.second) - (a.second - o.second) * (b.first - o.first);
  };
  std::vector<std::pair<double, double>> h(2 * p.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], p[i]) <= 0) --k;
    h[k++] = p[i];
  }
  for (std::size_t i = p.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(h[k - 2], h[k - 1], p[i]) <= 0) --k;
    h[k++] = p[i];
  }
  double per = 0.0;
  for (std::size_t i = 0; i + 1 < k; ++i) per += std::hypot(h[i + 1].first - h[i].first, h[i + 1].second - h[i].second);
  return per;
}

PointSet normal_points(int d, std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  PointSet out(d, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (int k = 0; k < d; ++k) out[i][static_cast<std::size_t>(k)] = g(rng);
  }
  return out;
}

double chi2_survival_quadrature(double x, int k) {
  if (x <= 0.0) return 1.0;
  const double half = 0.5 * k;
  const double lognorm = -half * std::log(2.0) - std::lgamma(half);
  // Substitute t = x + u^2 to tame the tail and integrate to a generous cutoff.
  auto density = [&](double u) {
    const double t = x + u * u;
    return 2.0 * u * std::exp(lognorm + (half - 1.0) * std::log(t) - t / 2.0);
  };
  const double upper = std::sqrt(std::max(200.0, 4.0 * x));
  return integrate(density, 0.0, upper, 1e-13);
}

}  // namespace gpl::oracle
