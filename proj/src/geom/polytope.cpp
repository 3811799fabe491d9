#include "gpl/geom/polytope.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_set>

#include "gpl/error.hpp"
#include "gpl/geom/linalg.hpp"

namespace gpl::geom {

Polytope::Polytope(int dim, std::vector<Vector> vertices, std::vector<std::size_t> source_indices,
                   std::vector<Facet> facets, double scale)
    : dim_(dim),
      vertices_(std::move(vertices)),
      source_(std::move(source_indices)),
      facets_(std::move(facets)),
      scale_(scale) {}

Vector Polytope::vertex_centroid() const {
  Vector c = Vector::Zero(dim_);
  for (const auto& v : vertices_) c += v;
  if (!vertices_.empty()) c /= static_cast<double>(vertices_.size());
  return c;
}

double Polytope::max_vertex_norm() const {
  double m = 0.0;
  for (const auto& v : vertices_) m = std::max(m, v.norm());
  return m;
}

bool Polytope::contains(std::span<const double> x) const noexcept {
  const double eps = kEpsGeom * scale_;
  for (const auto& f : facets_) {
    double s = -f.offset;
    for (int k = 0; k < dim_; ++k) s += f.normal[k] * x[static_cast<std::size_t>(k)];
    if (s > eps) return false;
  }
  return true;
}

double volume(const Polytope& p) {
  if (p.facets().empty() || static_cast<int>(p.vertices().size()) <= p.dim()) {
    throw Error(Errc::empty_interior, "polytope has no interior");
  }
  const Vector base = p.vertex_centroid();
  std::array<Vector, kMaxDim> verts;
  double total = 0.0;
  for (std::size_t f = 0; f < p.facets().size(); ++f) {
    const auto idx = p.facet_vertices(f);
    for (std::size_t k = 0; k < idx.size(); ++k) verts[k] = p.vertices()[static_cast<std::size_t>(idx[k])];
    total += simplex_volume(base, std::span<const Vector>(verts.data(), idx.size()));
  }
  return total;
}

namespace {

struct TupleHash {
  std::size_t operator()(const std::vector<int>& t) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (int v : t) {
      h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

void check_face_dim(const Polytope& p, int s) {
  if (s < 0 || s > p.dim() - 1) {
    throw Error(Errc::invalid_dimension, "face dimension must lie in [0, d-1]");
  }
}

// Visits every (s+1)-subset of every facet tuple, sorted.
template <typename Visit>
void for_each_facet_subset(const Polytope& p, int s, Visit&& visit) {
  const int d = p.dim();
  const int k = s + 1;
  std::vector<int> pick(static_cast<std::size_t>(k));
  std::vector<int> tuple(static_cast<std::size_t>(k));
  for (std::size_t f = 0; f < p.facets().size(); ++f) {
    std::array<int, kMaxDim> sorted{};
    const auto idx = p.facet_vertices(f);
    std::copy(idx.begin(), idx.end(), sorted.begin());
    std::sort(sorted.begin(), sorted.begin() + d);
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
      for (int i = 0; i < k; ++i) tuple[static_cast<std::size_t>(i)] = sorted[static_cast<std::size_t>(pick[static_cast<std::size_t>(i)])];
      visit(tuple);
      int i = k - 1;
      while (i >= 0 && pick[static_cast<std::size_t>(i)] == d - k + i) --i;
      if (i < 0) break;
      ++pick[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < k; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
}

}  // namespace

std::size_t face_count(const Polytope& p, int s) {
  check_face_dim(p, s);
  if (s == 0) return p.vertices().size();
  if (s == p.dim() - 1) return p.facets().size();
  std::unordered_set<std::vector<int>, TupleHash> seen;
  for_each_facet_subset(p, s, [&](const std::vector<int>& t) { seen.insert(t); });
  return seen.size();
}

std::vector<std::vector<int>> enumerate_faces(const Polytope& p, int s) {
  check_face_dim(p, s);
  std::vector<std::vector<int>> faces;
  for_each_facet_subset(p, s, [&](const std::vector<int>& t) { faces.push_back(t); });
  std::sort(faces.begin(), faces.end());
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  return faces;
}

std::vector<std::size_t> f_vector(const Polytope& p) {
  std::vector<std::size_t> f(static_cast<std::size_t>(p.dim()));
  for (int s = 0; s < p.dim(); ++s) f[static_cast<std::size_t>(s)] = face_count(p, s);
  return f;
}

double surface_area(const Polytope& p) {
  std::array<Vector, kMaxDim> verts;
  double total = 0.0;
  for (std::size_t f = 0; f < p.facets().size(); ++f) {
    const auto idx = p.facet_vertices(f);
    for (std::size_t k = 0; k < idx.size(); ++k) verts[k] = p.vertices()[static_cast<std::size_t>(idx[k])];
    total += simplex_measure(std::span<const Vector>(verts.data(), idx.size()));
  }
  return total;
}

}  // namespace gpl::geom
