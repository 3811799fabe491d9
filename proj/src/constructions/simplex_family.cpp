#include "gpl/constructions/simplex_family.hpp"

#include <algorithm>
#include <cmath>

#include "gpl/error.hpp"
#include "gpl/geom/linalg.hpp"
#include "gpl/geom/simplex.hpp"
#include "gpl/sampling/normal.hpp"

namespace gpl::constructions {

using geom::kEpsGeom;
using geom::Vector;

std::vector<double> FamilyMember::coordinates(const Vector& x) const {
  const Vector tail = barycentric * (x - vertices[0]);
  std::vector<double> out(static_cast<std::size_t>(tail.size()) + 1);
  out[0] = 1.0 - tail.sum();
  for (Eigen::Index k = 0; k < tail.size(); ++k) out[static_cast<std::size_t>(k) + 1] = tail[k];
  return out;
}

bool FamilyMember::in_simplex(const Vector& x) const {
  const auto lambda = coordinates(x);
  return std::all_of(lambda.begin(), lambda.end(), [](double l) { return l >= -kEpsGeom; });
}

bool FamilyMember::in_shrunken(const Vector& x, int j) const {
  const Vector& anchor = vertices[static_cast<std::size_t>(j)];
  return in_simplex(Vector(anchor + (x - anchor) / b2));
}

std::vector<Vector> FamilyMember::shrunken_vertices(int j, double factor) const {
  const Vector& anchor = vertices[static_cast<std::size_t>(j)];
  std::vector<Vector> out;
  out.reserve(vertices.size());
  for (const auto& v : vertices) out.push_back(anchor + factor * (v - anchor));
  return out;
}

bool FamilyMember::in_forbidden_union(const Vector& x) const {
  if (h_plus.signed_distance(x) >= 0.0) return true;
  return std::any_of(h.begin(), h.end(), [&](const geom::Hyperplane& p) { return p.signed_distance(x) >= 0.0; });
}

SimplexFamily build_simplex_family(const SphereNet& net, double r, double b2) {
  if (!(b2 > 0.0 && b2 < 1.0)) throw Error(Errc::config_invalid, "b2 must lie in (0, 1)");
  if (std::abs(net.radius - r) > kEpsGeom * std::max(1.0, r)) {
    throw Error(Errc::config_invalid, "net radius differs from the construction radius");
  }
  const int d = net.dim;
  SimplexFamily fam{d, r, b2, {}};
  fam.members.reserve(net.size());
  for (const auto& y : net.centers) {
    FamilyMember m;
    m.b2 = b2;
    m.center = y;
    const Vector u = y / y.norm();
    std::vector<Vector> frame;
    try {
      frame = geom::orthonormal_complement(u);
      m.vertices.push_back((1.0 + 1.0 / (r * r)) * y);
      for (auto& v : geom::regular_simplex(d - 1, std::sqrt(2.0), y, frame)) m.vertices.push_back(v);
    } catch (const Error& e) {
      throw Error(Errc::frame_construction_failure, e.what());
    }

    geom::Matrix edges(d, d);
    for (int k = 0; k < d; ++k) edges.col(k) = m.vertices[static_cast<std::size_t>(k) + 1] - m.vertices[0];
    Eigen::PartialPivLU<geom::Matrix> lu(edges);
    if (!(std::abs(lu.determinant()) > kEpsGeom)) {
      throw Error(Errc::frame_construction_failure, "construction simplex is degenerate");
    }
    m.barycentric = lu.inverse();
    m.h_plus = geom::Hyperplane{u, r};

    for (int j = 1; j <= d; ++j) {
      std::vector<Vector> tangent;
      for (int k = 0; k <= d; ++k) {
        if (k == j) continue;
        const Vector& vk = m.vertices[static_cast<std::size_t>(k)];
        tangent.push_back(vk + b2 * (m.vertices[static_cast<std::size_t>(j)] - vk));
      }
      auto plane = geom::affine_hyperplane(tangent, r + 2.0);
      if (!plane || std::abs(plane->offset) <= kEpsGeom * r) {
        throw Error(Errc::frame_construction_failure, "tangent hyperplane is degenerate");
      }
      if (plane->offset < 0.0) {
        plane->normal = -plane->normal;
        plane->offset = -plane->offset;
      }
      m.h.push_back(*plane);
    }
    fam.members.push_back(std::move(m));
  }
  return fam;
}

std::vector<std::vector<double>> halfspace_family_mass(const SimplexFamily& fam) {
  std::vector<std::vector<double>> out;
  out.reserve(fam.members.size());
  for (const auto& m : fam.members) {
    std::vector<double> row{sampling::halfspace_tail(m.h_plus.offset)};
    for (const auto& p : m.h) row.push_back(sampling::halfspace_tail(p.offset));
    out.push_back(std::move(row));
  }
  return out;
}

Vector uniform_in_simplex(const std::vector<Vector>& vertices, sampling::RngStream& rng) {
  // Normalized exponential spacings are uniform on the standard simplex.
  std::vector<double> w(vertices.size());
  double total = 0.0;
  for (auto& x : w) {
    x = -std::log(rng.uniform_open());
    total += x;
  }
  Vector out = Vector::Zero(vertices[0].size());
  for (std::size_t k = 0; k < vertices.size(); ++k) out += (w[k] / total) * vertices[k];
  return out;
}

namespace {

MassEstimate mean_estimate(double factor, double sum, double sum_sq, std::size_t samples) {
  const double n = static_cast<double>(samples);
  const double mean = sum / n;
  const double var = std::max(0.0, (sum_sq / n - mean * mean) * n / std::max(1.0, n - 1.0));
  return {factor * mean, factor * std::sqrt(var / n)};
}

}  // namespace

MassEstimate simplex_gaussian_mass(const std::vector<Vector>& vertices, std::size_t samples,
                                   sampling::RngStream& rng) {
  const int d = static_cast<int>(vertices[0].size());
  const double vol = geom::simplex_volume(vertices[0], std::span<const Vector>(vertices).subspan(1));
  const double norm = std::pow(2.0 * M_PI, -0.5 * d);
  double sum = 0.0, sum_sq = 0.0;
  for (std::size_t s = 0; s < samples; ++s) {
    const double dens = norm * std::exp(-0.5 * uniform_in_simplex(vertices, rng).squaredNorm());
    sum += dens;
    sum_sq += dens * dens;
  }
  return mean_estimate(vol, sum, sum_sq, samples);
}

MassEstimate forbidden_union_mass(const FamilyMember& m, std::size_t samples, sampling::RngStream& rng) {
  std::vector<const geom::Hyperplane*> planes{&m.h_plus};
  for (const auto& p : m.h) planes.push_back(&p);
  std::vector<double> weight;
  double total = 0.0;
  for (const auto* p : planes) {
    weight.push_back(sampling::halfspace_tail(p->offset));
    total += weight.back();
  }
  const int d = static_cast<int>(m.center.size());
  double sum = 0.0, sum_sq = 0.0;
  for (std::size_t s = 0; s < samples; ++s) {
    double pick = rng.uniform() * total;
    std::size_t k = 0;
    while (k + 1 < planes.size() && pick >= weight[k]) pick -= weight[k++];
    const geom::Hyperplane& hp = *planes[k];
    const double t = -sampling::std_normal_quantile(rng.uniform_open() * weight[k]);
    Vector x(d);
    for (int c = 0; c < d; ++c) x[c] = rng.normal();
    x += (t - x.dot(hp.normal)) * hp.normal;
    int covering = 0;
    for (const auto* p : planes) covering += p->signed_distance(x) >= 0.0 ? 1 : 0;
    const double w = 1.0 / std::max(1, covering);
    sum += w;
    sum_sq += w * w;
  }
  return mean_estimate(total, sum, sum_sq, samples);
}

namespace {

template <class Get>
bool event_A_impl(std::size_t count, Get get, const SimplexFamily& fam, std::size_t i, int k_required) {
  const FamilyMember& m = fam.members.at(i);
  const int d = fam.dim;
  std::vector<int> hits(static_cast<std::size_t>(d) + 1, 0);
  std::size_t in_union = 0;
  for (std::size_t p = 0; p < count; ++p) {
    const Vector x = get(p);
    if (!m.in_forbidden_union(x)) continue;
    ++in_union;
    for (int j = 0; j <= d; ++j) {
      if (m.in_shrunken(x, j)) {
        ++hits[static_cast<std::size_t>(j)];
        break;
      }
    }
  }
  if (hits[0] != k_required) return false;
  for (int j = 1; j <= d; ++j) {
    if (hits[static_cast<std::size_t>(j)] != 1) return false;
  }
  return in_union == static_cast<std::size_t>(k_required + d);
}

}  // namespace

bool detect_event_A(const std::vector<Vector>& sample, const SimplexFamily& fam, std::size_t i, int k_required) {
  return event_A_impl(sample.size(), [&](std::size_t p) { return sample[p]; }, fam, i, k_required);
}

bool detect_event_A(const geom::PointSet& sample, const SimplexFamily& fam, std::size_t i, int k_required) {
  return event_A_impl(sample.size(), [&](std::size_t p) { return sample.vector(p); }, fam, i, k_required);
}

MassEstimate event_A_probability(const SimplexFamily& fam, std::size_t i, double n, int k_required,
                                 std::size_t samples, sampling::RngStream& rng) {
  const FamilyMember& m = fam.members.at(i);
  const int d = fam.dim;
  const double k = k_required;
  const double rest = n - d - k;
  if (rest < 0.0) return {0.0, 0.0};
  double log_p = std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(rest + 1.0);
  double rel_var = 0.0;
  for (int j = 0; j <= d; ++j) {
    const MassEstimate s = simplex_gaussian_mass(m.shrunken_vertices(j, fam.b2), samples, rng);
    const double power = j == 0 ? k : 1.0;
    log_p += power * std::log(s.value);
    rel_var += std::pow(power * s.se / s.value, 2);
  }
  const MassEstimate u = forbidden_union_mass(m, samples, rng);
  log_p += rest * std::log1p(-u.value);
  rel_var += std::pow(rest * u.se / (1.0 - u.value), 2);
  const double p = std::exp(log_p);
  return {p, p * std::sqrt(rel_var)};
}

geom::Cone construction_cone(const std::vector<Vector>& z) {
  geom::Cone c{z[0], {}};
  for (std::size_t j = 1; j < z.size(); ++j) c.generators.push_back(z[j] - z[0]);
  return c;
}

}  // namespace gpl::constructions
