#include "gpl/geom/hull.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "gpl/error.hpp"
#include "gpl/geom/linalg.hpp"

namespace gpl::geom {

namespace {

using Key = std::array<int, kMaxDim>;

struct RidgeEntry {
  Key key;
  int facet;
  int slot;
};

}  // namespace

IncrementalHull::IncrementalHull(const PointSet& points, std::size_t count)
    : points_(&points), dim_(points.dim()), scale_(points.scale()) {
  if (dim_ < 2 || dim_ > kMaxDim) {
    throw Error(Errc::dimension_mismatch, "hull dimension must be in [2, " + std::to_string(kMaxDim) + "]");
  }
  if (count > points.size()) count = points.size();
  if (count < static_cast<std::size_t>(dim_) + 1) {
    throw Error(Errc::degenerate_input, "need at least d+1 points for a full-dimensional hull");
  }
  eps_ = kEpsGeom * scale_;
  inserted_ = count;
  build_initial_simplex();
  drain();
}

double IncrementalHull::distance(const HullFacet& f, int point) const noexcept {
  const auto p = (*points_)[static_cast<std::size_t>(point)];
  double s = -f.offset;
  for (int k = 0; k < dim_; ++k) s += f.normal[static_cast<std::size_t>(k)] * p[static_cast<std::size_t>(k)];
  return s;
}

void IncrementalHull::build_initial_simplex() {
  const int d = dim_;
  const auto n = static_cast<int>(inserted_);
  const PointSet& pts = *points_;

  int lo = 0, hi = 0;
  for (int i = 1; i < n; ++i) {
    if (pts[i][0] < pts[lo][0]) lo = i;
    if (pts[i][0] > pts[hi][0]) hi = i;
  }
  std::vector<int> chosen{lo};
  std::vector<Vector> basis;
  const Vector origin = pts.vector(static_cast<std::size_t>(lo));

  auto residual = [&](int i) {
    Vector r = pts.vector(static_cast<std::size_t>(i)) - origin;
    for (const auto& b : basis) r -= b.dot(r) * b;
    return r;
  };

  int next = hi;
  for (int k = 0; k < d; ++k) {
    if (k > 0) {
      double best = -1.0;
      for (int i = 0; i < n; ++i) {
        const double len = residual(i).squaredNorm();
        if (len > best) {
          best = len;
          next = i;
        }
      }
    }
    const Vector r = residual(next);
    const double len = r.norm();
    if (!(len > eps_) || std::find(chosen.begin(), chosen.end(), next) != chosen.end()) {
      throw Error(Errc::degenerate_input, "points are affinely dependent");
    }
    basis.push_back(r / len);
    chosen.push_back(next);
  }

  interior_.assign(static_cast<std::size_t>(d), 0.0);
  for (int c : chosen) {
    const auto p = pts[static_cast<std::size_t>(c)];
    for (int k = 0; k < d; ++k) interior_[static_cast<std::size_t>(k)] += p[static_cast<std::size_t>(k)] / (d + 1);
  }

  // Facet a lies opposite chosen[a]; across its ridge opposite chosen[b]
  // sits facet b.
  for (int a = 0; a <= d; ++a) {
    Key verts{};
    Key nb{};
    int slot = 0;
    for (int b = 0; b <= d; ++b) {
      if (b == a) continue;
      verts[static_cast<std::size_t>(slot)] = chosen[static_cast<std::size_t>(b)];
      nb[static_cast<std::size_t>(slot)] = b;
      ++slot;
    }
    const int f = make_facet(verts);
    facets_[static_cast<std::size_t>(f)].nb = nb;
  }

  std::vector<int> all(static_cast<std::size_t>(d) + 1);
  for (int a = 0; a <= d; ++a) all[static_cast<std::size_t>(a)] = a;
  for (int i = 0; i < n; ++i) {
    if (std::find(chosen.begin(), chosen.end(), i) != chosen.end()) continue;
    assign_outside(i, all);
  }
  for (int a = 0; a <= d; ++a) {
    if (!facets_[static_cast<std::size_t>(a)].outside.empty()) pending_.push_back(a);
  }
}

int IncrementalHull::make_facet(const Key& verts) {
  std::array<Vector, kMaxDim> coords;
  for (int k = 0; k < dim_; ++k) coords[static_cast<std::size_t>(k)] = points_->vector(static_cast<std::size_t>(verts[static_cast<std::size_t>(k)]));
  auto normal = hyperplane_normal(std::span<const Vector>(coords.data(), static_cast<std::size_t>(dim_)), scale_);
  if (!normal) throw Error(Errc::degenerate_input, "facet vertices are affinely dependent");
  double offset = normal->dot(coords[0]);
  double inner = -offset;
  for (int k = 0; k < dim_; ++k) inner += (*normal)[k] * interior_[static_cast<std::size_t>(k)];
  if (inner > 0.0) {
    *normal = -*normal;
    offset = -offset;
  }
  HullFacet f;
  f.v = verts;
  for (int k = 0; k < dim_; ++k) f.normal[static_cast<std::size_t>(k)] = (*normal)[k];
  f.offset = offset;
  facets_.push_back(std::move(f));
  return static_cast<int>(facets_.size()) - 1;
}

void IncrementalHull::assign_outside(int point, std::span<const int> candidates) {
  for (int c : candidates) {
    HullFacet& f = facets_[static_cast<std::size_t>(c)];
    if (!f.alive) continue;
    const double dist = distance(f, point);
    if (dist > eps_) {
      f.outside.push_back(point);
      if (dist > f.furthest_dist) {
        f.furthest_dist = dist;
        f.furthest = point;
      }
      return;
    }
  }
}

void IncrementalHull::drain() {
  while (!pending_.empty()) {
    const int f = pending_.back();
    pending_.pop_back();
    const HullFacet& facet = facets_[static_cast<std::size_t>(f)];
    if (!facet.alive || facet.outside.empty()) continue;
    insert_apex(facet.furthest, f);
  }
}

void IncrementalHull::insert_apex(int apex, int start_facet) {
  const auto d = static_cast<std::size_t>(dim_);
  ++mark_;
  std::vector<int> visible{start_facet};
  facets_[static_cast<std::size_t>(start_facet)].mark = mark_;
  std::vector<std::pair<int, int>> horizon;
  for (std::size_t q = 0; q < visible.size(); ++q) {
    const int fq = visible[q];
    for (std::size_t t = 0; t < d; ++t) {
      const int g = facets_[static_cast<std::size_t>(fq)].nb[t];
      HullFacet& fg = facets_[static_cast<std::size_t>(g)];
      if (fg.mark == mark_) continue;
      if (distance(fg, apex) > eps_) {
        fg.mark = mark_;
        visible.push_back(g);
      } else {
        horizon.emplace_back(fq, static_cast<int>(t));
      }
    }
  }

  std::vector<int> created;
  created.reserve(horizon.size());
  std::vector<RidgeEntry> ridges;
  ridges.reserve(horizon.size() * (d - 1));
  for (const auto& [fq, t] : horizon) {
    Key verts = facets_[static_cast<std::size_t>(fq)].v;
    const int g = facets_[static_cast<std::size_t>(fq)].nb[static_cast<std::size_t>(t)];
    verts[static_cast<std::size_t>(t)] = apex;
    const int nf = make_facet(verts);
    created.push_back(nf);
    HullFacet& fresh = facets_[static_cast<std::size_t>(nf)];
    fresh.nb[static_cast<std::size_t>(t)] = g;
    HullFacet& across = facets_[static_cast<std::size_t>(g)];
    for (std::size_t s = 0; s < d; ++s) {
      if (across.nb[s] == fq) {
        across.nb[s] = nf;
        break;
      }
    }
    for (std::size_t u = 0; u < d; ++u) {
      if (static_cast<int>(u) == t) continue;
      RidgeEntry e{};
      e.key.fill(-1);
      std::size_t w = 0;
      for (std::size_t k = 0; k < d; ++k) {
        if (k == u || static_cast<int>(k) == t) continue;
        e.key[w++] = verts[k];
      }
      std::sort(e.key.begin(), e.key.begin() + static_cast<std::ptrdiff_t>(w));
      e.facet = nf;
      e.slot = static_cast<int>(u);
      ridges.push_back(e);
    }
  }

  std::sort(ridges.begin(), ridges.end(), [](const RidgeEntry& a, const RidgeEntry& b) { return a.key < b.key; });
  for (std::size_t i = 0; i < ridges.size(); i += 2) {
    if (i + 1 >= ridges.size() || ridges[i].key != ridges[i + 1].key ||
        (i + 2 < ridges.size() && ridges[i + 2].key == ridges[i].key)) {
      throw Error(Errc::degenerate_input, "inconsistent horizon while inserting a point");
    }
    facets_[static_cast<std::size_t>(ridges[i].facet)].nb[static_cast<std::size_t>(ridges[i].slot)] = ridges[i + 1].facet;
    facets_[static_cast<std::size_t>(ridges[i + 1].facet)].nb[static_cast<std::size_t>(ridges[i + 1].slot)] = ridges[i].facet;
  }

  std::vector<int> orphans;
  for (int fv : visible) {
    HullFacet& f = facets_[static_cast<std::size_t>(fv)];
    f.alive = false;
    for (int p : f.outside) {
      if (p != apex) orphans.push_back(p);
    }
    f.outside.clear();
    f.outside.shrink_to_fit();
  }
  for (int p : orphans) assign_outside(p, created);
  for (int nf : created) {
    if (!facets_[static_cast<std::size_t>(nf)].outside.empty()) pending_.push_back(nf);
  }
}

void IncrementalHull::extend(std::size_t new_count) {
  new_count = std::min(new_count, points_->size());
  if (new_count <= inserted_) return;
  std::vector<int> live;
  for (std::size_t f = 0; f < facets_.size(); ++f) {
    if (facets_[f].alive) live.push_back(static_cast<int>(f));
  }
  for (std::size_t i = inserted_; i < new_count; ++i) assign_outside(static_cast<int>(i), live);
  inserted_ = new_count;
  for (int f : live) {
    if (!facets_[static_cast<std::size_t>(f)].outside.empty()) pending_.push_back(f);
  }
  drain();
}

Polytope IncrementalHull::polytope() const {
  std::unordered_map<int, int> index;
  std::vector<Vector> vertices;
  std::vector<std::size_t> source;
  std::vector<Facet> facets;
  for (const auto& f : facets_) {
    if (!f.alive) continue;
    Facet out;
    out.normal = Vector(dim_);
    for (int k = 0; k < dim_; ++k) {
      const int p = f.v[static_cast<std::size_t>(k)];
      auto [it, fresh] = index.try_emplace(p, static_cast<int>(vertices.size()));
      if (fresh) {
        vertices.push_back(points_->vector(static_cast<std::size_t>(p)));
        source.push_back(static_cast<std::size_t>(p));
      }
      out.vertices[static_cast<std::size_t>(k)] = it->second;
      out.normal[k] = f.normal[static_cast<std::size_t>(k)];
    }
    out.offset = f.offset;
    facets.push_back(std::move(out));
  }
  return Polytope(dim_, std::move(vertices), std::move(source), std::move(facets), scale_);
}

Polytope convex_hull(const PointSet& points) { return IncrementalHull(points).polytope(); }

Polytope convex_hull(const std::vector<Vector>& points) {
  if (points.empty()) throw Error(Errc::degenerate_input, "empty point list");
  const auto d = points.front().size();
  for (const auto& p : points) {
    if (p.size() != d) throw Error(Errc::dimension_mismatch, "points of mixed dimension");
  }
  const PointSet set = PointSet::from_vectors(points);
  return convex_hull(set);
}

}  // namespace gpl::geom
