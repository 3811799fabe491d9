#include <algorithm>
#include <cmath>
#include <numbers>

#include "doctest.h"
#include "gpl/constructions/cells.hpp"
#include "gpl/constructions/dependency_graph.hpp"
#include "gpl/constructions/sandwich.hpp"
#include "gpl/constructions/simplex_family.hpp"
#include "gpl/constructions/sphere_net.hpp"
#include "gpl/error.hpp"
#include "gpl/geom/hull.hpp"
#include "gpl/geom/predicates.hpp"
#include "gpl/geom/simplex.hpp"
#include "gpl/models/model.hpp"
#include "gpl/models/radii.hpp"
#include "gpl/sampling/normal.hpp"
#include "gpl/sampling/samplers.hpp"
#include "support/oracles.hpp"

using namespace gpl;
using namespace gpl::constructions;
using geom::Vector;
using sampling::RngStream;

namespace {

SimplexFamily family_for(int d, double n, double b1, double b2, std::uint64_t seed) {
  const double r = models::radius_r_construction(n);
  RngStream rng(seed, sampling::kNetStream);
  return build_simplex_family(build_net(d, r, 2.0 * b1, rng), r, b2);
}

Vector centroid(const std::vector<Vector>& v) {
  Vector c = Vector::Zero(v[0].size());
  for (const auto& x : v) c += x;
  return c / static_cast<double>(v.size());
}

}  // namespace

TEST_CASE("net with separation above the diameter has one center") {
  RngStream rng(1, 0);
  CHECK(build_net(2, 1.0, 2.1, rng).size() == 1);
}

TEST_CASE("net on a circle against the arc-packing oracle") {
  // A maximal theta-separated set on a circle has every gap in [theta, 2 theta),
  // hence pi/theta < m <= 2 pi/theta.
  for (double sep : {0.3, 0.8, 1.7}) {
    RngStream rng(7, static_cast<std::uint64_t>(sep * 10));
    const double radius = 3.0;
    const SphereNet net = build_net(2, radius, sep, rng);
    const double theta = 2.0 * std::asin(sep / (2.0 * radius));
    const double m = static_cast<double>(net.size());
    CHECK(m > std::numbers::pi / theta - 1e-9);
    CHECK(m <= 2.0 * std::numbers::pi / theta + 1e-9);
    std::vector<double> ang;
    for (const auto& c : net.centers) ang.push_back(std::atan2(c[1], c[0]));
    std::sort(ang.begin(), ang.end());
    ang.push_back(ang.front() + 2.0 * std::numbers::pi);
    for (std::size_t k = 0; k + 1 < ang.size(); ++k) {
      const double gap = ang[k + 1] - ang[k];
      CHECK(gap >= theta - 1e-12);
      CHECK(gap < 2.0 * theta + 1e-3);
    }
  }
}

TEST_CASE("net validity in three dimensions") {
  RngStream rng(3, 0);
  const SphereNet net = build_net(3, 4.0, 1.0, rng);
  CHECK(net.size() > 20);
  CHECK(min_pairwise_distance(net) >= 1.0);
  for (const auto& c : net.centers) CHECK(c.norm() == doctest::Approx(4.0).epsilon(1e-12));
  RngStream probes(3, 1);
  CHECK(uncovered_probes(net, 100000, probes) <= 2);
  const auto j = to_json(net);
  CHECK(j["centers"].size() == net.size());
}

TEST_CASE("simplex family geometry") {
  for (int d : {2, 3, 4}) {
    const SimplexFamily fam = family_for(d, 65536.0, 1.5, 0.05, 11);
    const double r = fam.r;
    REQUIRE(!fam.members.empty());
    for (const auto& m : fam.members) {
      REQUIRE(m.vertices.size() == static_cast<std::size_t>(d) + 1);
      CHECK(m.vertices[0].norm() == doctest::Approx(r + 1.0 / r).epsilon(1e-12));
      for (int j = 1; j <= d; ++j) {
        CHECK(m.vertices[static_cast<std::size_t>(j)].norm() == doctest::Approx(std::sqrt(r * r + 2.0)).epsilon(1e-12));
        CHECK((m.vertices[static_cast<std::size_t>(j)] - m.center).norm() == doctest::Approx(std::sqrt(2.0)));
      }
      CHECK(centroid({m.vertices.begin() + 1, m.vertices.end()}).isApprox(m.center, 1e-12));
      // Every vertex lies on the far side of z . y = r^2, so the whole
      // simplex avoids the open ball B(r).
      for (const auto& v : m.vertices) CHECK(v.dot(m.center) >= r * r - 1e-9);
      for (int j = 0; j <= d; ++j) {
        for (const auto& v : m.shrunken_vertices(j, fam.b2)) {
          CHECK(m.in_simplex(v));
          CHECK(m.in_shrunken(v, j));
        }
      }
    }
  }
}

TEST_CASE("forbidden halfspaces") {
  for (int d : {2, 3}) {
    const SimplexFamily fam = family_for(d, 65536.0, 1.5, 0.05, 12);
    const double r = fam.r;
    const auto mass = halfspace_family_mass(fam);
    for (std::size_t i = 0; i < fam.members.size(); ++i) {
      const auto& m = fam.members[i];
      CHECK(m.h_plus.offset == doctest::Approx(r));
      CHECK(mass[i][0] == doctest::Approx(sampling::halfspace_tail(r)));
      for (int j = 1; j <= d; ++j) {
        const auto& h = m.h[static_cast<std::size_t>(j) - 1];
        CHECK(h.offset >= r - 2.0 * d * d / r);
        CHECK(h.signed_distance(m.vertices[static_cast<std::size_t>(j)]) < 0.0);
        for (int k = 0; k <= d; ++k) {
          if (k == j) continue;
          const auto verts = m.shrunken_vertices(k, fam.b2);
          double lowest = 1e300;
          for (const auto& v : verts) {
            CHECK(h.signed_distance(v) >= -1e-9);
            lowest = std::min(lowest, h.signed_distance(v));
          }
          CHECK(std::abs(lowest) < 1e-9);
        }
        CHECK(mass[i][static_cast<std::size_t>(j)] == doctest::Approx(sampling::halfspace_tail(h.offset)));
      }
    }
  }
}

TEST_CASE("event A on constructed samples") {
  const SimplexFamily fam = family_for(2, 4096.0, 4.0, 0.05, 13);
  const auto& m = fam.members[0];
  std::vector<Vector> sample(50, Vector::Zero(2));
  for (int j = 0; j <= 2; ++j) sample.push_back(centroid(m.shrunken_vertices(j, fam.b2)));
  CHECK(detect_event_A(sample, fam, 0, 1));
  CHECK_FALSE(detect_event_A(sample, fam, 0, 2));

  auto two = sample;
  two.push_back(0.5 * (m.shrunken_vertices(0, fam.b2)[0] + centroid(m.shrunken_vertices(0, fam.b2))));
  CHECK(detect_event_A(two, fam, 0, 2));
  CHECK_FALSE(detect_event_A(two, fam, 0, 1));

  auto beyond = sample;
  beyond.push_back(3.0 * m.center);
  CHECK_FALSE(detect_event_A(beyond, fam, 0, 1));
  auto missing = sample;
  missing.pop_back();
  CHECK_FALSE(detect_event_A(missing, fam, 0, 1));
}

TEST_CASE("forbidden union mass against plain Monte Carlo") {
  const SimplexFamily fam = family_for(2, 256.0, 4.0, 0.2, 14);
  const auto& m = fam.members[0];
  RngStream rng(14, 1);
  const MassEstimate u = forbidden_union_mass(m, 200000, rng);
  std::size_t hit = 0;
  const std::size_t darts = 4000000;
  for (std::size_t t = 0; t < darts; ++t) {
    Vector x(2);
    x << rng.normal(), rng.normal();
    hit += m.in_forbidden_union(x) ? 1 : 0;
  }
  const double p = static_cast<double>(hit) / darts;
  const double se = std::sqrt(p * (1 - p) / darts);
  CHECK(std::abs(u.value - p) < 4.0 * std::hypot(se, u.se));
  CHECK(u.value >= sampling::halfspace_tail(m.h_plus.offset));

  // A single halfspace carries exactly its tail mass.
  FamilyMember lone = m;
  lone.h.clear();
  const MassEstimate one = forbidden_union_mass(lone, 1000, rng);
  CHECK(one.value == doctest::Approx(sampling::halfspace_tail(m.h_plus.offset)).epsilon(1e-12));
  CHECK(one.se == doctest::Approx(0.0));
}

TEST_CASE("simplex mass against bounding-box darts") {
  const SimplexFamily fam = family_for(2, 1024.0, 4.0, 0.05, 15);
  const auto& m = fam.members[0];
  RngStream rng(15, 1);
  const MassEstimate est = simplex_gaussian_mass(m.vertices, 200000, rng);
  Vector lo = m.vertices[0], hi = m.vertices[0];
  for (const auto& v : m.vertices) {
    lo = lo.cwiseMin(v);
    hi = hi.cwiseMax(v);
  }
  const double box = (hi - lo).prod();
  double sum = 0.0, sum_sq = 0.0;
  const std::size_t darts = 2000000;
  for (std::size_t t = 0; t < darts; ++t) {
    Vector x(2);
    x << lo[0] + rng.uniform() * (hi[0] - lo[0]), lo[1] + rng.uniform() * (hi[1] - lo[1]);
    const double f = m.in_simplex(x) ? std::exp(-0.5 * x.squaredNorm()) / (2 * std::numbers::pi) : 0.0;
    sum += f;
    sum_sq += f * f;
  }
  const double mean = sum / darts;
  const double se = std::sqrt((sum_sq / darts - mean * mean) / darts);
  CHECK(std::abs(est.value - box * mean) < 4.0 * std::hypot(est.se, box * se));
}

TEST_CASE("event A frequency matches the semi-analytic probability") {
  // A family on a small sphere makes the event common enough to count.
  const double r = 0.5;
  RngStream net_rng(16, 0);
  const SimplexFamily fam = build_simplex_family(build_net(2, r, 8.0, net_rng), r, 0.45);
  const double n = 6.0;
  RngStream mass_rng(16, 1);
  const MassEstimate p = event_A_probability(fam, 0, n, 1, 400000, mass_rng);
  const int trials = 200000;
  int hits = 0;
  for (int t = 0; t < trials; ++t) {
    RngStream rng(16, sampling::trial_stream(static_cast<std::uint64_t>(t)));
    hits += detect_event_A(sampling::sample_gaussian(static_cast<std::size_t>(n), 2, rng), fam, 0, 1) ? 1 : 0;
  }
  const double freq = static_cast<double>(hits) / trials;
  const double se = std::sqrt(p.value * (1 - p.value) / trials);
  MESSAGE("P(A) semi-analytic " << p.value << " +- " << p.se << ", empirical " << freq);
  CHECK(hits > 30);
  CHECK(std::abs(freq - p.value) < 4.0 * std::hypot(se, p.se));
}

TEST_CASE("construction cones swallow the other simplices") {
  for (int d : {2, 3}) {
    for (double n : {4096.0, 65536.0}) {
      const SimplexFamily fam = family_for(d, n, 4.0, 0.05, 17);
      RngStream rng(17, static_cast<std::uint64_t>(d * 100 + std::log2(n)));
      for (std::size_t i = 0; i < fam.members.size(); ++i) {
        const auto& m = fam.members[i];
        for (int draw = 0; draw < 100; ++draw) {
          std::vector<Vector> z;
          for (int j = 0; j <= d; ++j) z.push_back(uniform_in_simplex(m.shrunken_vertices(j, fam.b2), rng));
          const geom::Cone cone = construction_cone(z);
          for (std::size_t k = 0; k < fam.members.size(); ++k) {
            if (k == i) continue;
            CHECK(geom::cone_contains(cone, geom::Simplex{fam.members[k].vertices}));
          }
        }
      }
    }
  }
}

TEST_CASE("cell partition") {
  RngStream rng(18, 0);
  const double rho = 4.0;
  CellPartition cells = build_cells(build_net(3, rho, 1.2, rng), 6.0, 3.0);
  for (std::size_t i = 0; i < cells.size(); ++i) {
    CHECK(cells.cell_of(Vector(1.3 * cells.net.centers[i])) == i);
    CHECK(cells.cell_of(Vector(0.8 * cells.net.centers[i])) == i);
  }
  std::vector<std::size_t> load(cells.size(), 0);
  for (int t = 0; t < 20000; ++t) {
    const Vector x = uniform_in_annulus(3, 3.0, 6.0, rng);
    CHECK(cells.in_annulus(x));
    const std::size_t c = cells.cell_of(x);
    for (std::size_t i = 0; i < cells.size(); ++i) {
      CHECK((cells.net.centers[c] - x).norm() <= (cells.net.centers[i] - x).norm());
    }
    ++load[c];
  }
  CHECK(*std::min_element(load.begin(), load.end()) > 0);

  bool rejected = false;
  try {
    (void)build_cells(cells.net, 3.5, 3.0);
  } catch (const Error& e) {
    rejected = e.code() == Errc::config_invalid;
  }
  CHECK(rejected);
}

TEST_CASE("cell statistics on Poisson hulls") {
  models::Constants k;
  k.c1 = 0.8;
  const int d = 2;
  const double n = 65536.0;
  const auto radii = models::RadiiBundle::make(d, n, k);
  RngStream net_rng(19, sampling::kNetStream);
  const CellPartition cells = build_cells(build_net(d, radii.rho, 2.0 * radii.c1, net_rng), radii.R, radii.r_sandwich);
  const models::ModelSpec spec{models::ModelKind::poisson, d, n, 0.0};
  int checked = 0;
  for (int t = 0; t < 20; ++t) {
    const auto trial = models::generate(spec, radii, RngStream(19, sampling::trial_stream(static_cast<std::uint64_t>(t))));
    if (!trial.record.sandwich_ok) continue;
    ++checked;
    RngStream darts(19, sampling::kDartStream + static_cast<std::uint64_t>(t));
    for (int s : {0, 1}) {
      const CellStats st = cell_statistics(trial.hull, cells, trial.points, s, s == 0 ? 200000 : 0, darts);
      std::size_t total = 0;
      for (auto v : st.face_numerators) total += v;
      CHECK(total == static_cast<std::size_t>(s + 1) * geom::face_count(trial.hull, s));
      if (s == 0) {
        const double target = geom::volume(trial.hull) - sampling::unit_ball_volume(d) * radii.r_sandwich * radii.r_sandwich;
        CHECK(std::abs(st.xi_sum - target) < 3.0 * st.xi_sum_se);
        double sum = 0.0;
        for (double x : st.xi) sum += x;
        CHECK(sum == doctest::Approx(st.xi_sum));
        std::size_t points = 0;
        for (auto c : st.point_counts) points += c;
        CHECK(points <= trial.points.size());
        CHECK(max_cell_load(cells, trial.points) == *std::max_element(st.point_counts.begin(), st.point_counts.end()));
      }
    }
  }
  CHECK(checked >= 15);
}

TEST_CASE("cell statistics on a polytope covering the annulus") {
  RngStream rng(20, 0);
  const CellPartition cells = build_cells(build_net(2, 2.0, 1.0, rng), 3.0, 1.0);
  // A triangle with inradius 4 contains B(3).
  std::vector<Vector> tri;
  for (int k = 0; k < 3; ++k) {
    const double a = 2.0 * std::numbers::pi * k / 3.0;
    tri.push_back(geom::make_vector({8.0 * std::cos(a), 8.0 * std::sin(a)}));
  }
  const geom::Polytope p = geom::convex_hull(tri);
  const CellStats st = cell_statistics(p, cells, geom::PointSet::from_vectors(tri), 0, 100000, rng);
  const double annulus = annulus_volume(2, 1.0, 3.0);
  CHECK(st.xi_sum == doctest::Approx(annulus));
  CHECK(st.xi_sum_se == doctest::Approx(0.0));
  // By symmetry of the dart law each cell gets its angular share.
  std::vector<double> ang;
  for (const auto& c : cells.net.centers) ang.push_back(std::atan2(c[1], c[0]));
  for (std::size_t i = 0; i < cells.size(); ++i) {
    double lo = 1e9, hi = 1e9;
    for (std::size_t j = 0; j < cells.size(); ++j) {
      if (j == i) continue;
      double delta = std::remainder(ang[j] - ang[i], 2.0 * std::numbers::pi);
      if (delta > 0) hi = std::min(hi, delta); else lo = std::min(lo, -delta);
    }
    const double share = (lo + hi) / 2.0 / (2.0 * std::numbers::pi);
    CHECK(std::abs(st.xi[i] - share * annulus) < 4.0 * st.xi_se[i] + 1e-12);
  }

  bool violated = false;
  try {
    const auto small = geom::convex_hull(std::vector<Vector>{geom::make_vector({2, 0}), geom::make_vector({-1, 1.5}),
                                                             geom::make_vector({-1, -1.5})});
    (void)cell_statistics(small, cells, geom::PointSet::from_vectors(tri), 0, 10, rng);
  } catch (const Error& e) {
    violated = e.code() == Errc::condition_b_violated;
  }
  CHECK(violated);
}

TEST_CASE("dependency graph structure") {
  RngStream rng(21, 0);
  const SphereNet net = build_net(2, 4.0, 1.0, rng);
  const DependencyGraph g = build_dependency_graph(build_cells(net, 6.0, 3.0));
  CHECK(g.m == net.size());
  for (std::size_t i = 0; i < g.m; ++i) {
    CHECK_FALSE(g.adjacent(i, i));
    for (std::size_t j : g.adjacency[i]) CHECK(g.adjacent(j, i));
  }
  CHECK(g.theta_edge == doctest::Approx(2 * g.alpha_cell + 4 * std::acos(0.5)));
  const auto j = to_json(g);
  CHECK(j["adjacency"].size() == g.m);

  // With r = R the segments collapse and only nearby cells remain joined.
  CellPartition thin{net, 4.5, 4.5};
  const DependencyGraph flat = build_dependency_graph(thin);
  CHECK(flat.gamma == doctest::Approx(0.0));
  for (std::size_t a = 0; a < flat.m; ++a) {
    for (std::size_t b = a + 1; b < flat.m; ++b) {
      CHECK(flat.adjacent(a, b) == (angle_between(net.centers[a], net.centers[b]) <= 2 * flat.alpha_cell));
    }
  }
  CHECK(flat.max_degree() < flat.m - 1);
}

TEST_CASE("dependency graph has no false negatives") {
  // Non-edges must admit no a_i in W_i, a_j in W_j and b in the annulus
  // with both segments [a_i, b], [b, a_j] outside B(r).
  for (int d : {2, 3}) {
    RngStream rng(22, static_cast<std::uint64_t>(d));
    const double rho = 4.0, r = 3.6, R = 4.6;
    const CellPartition cells = build_cells(build_net(d, rho, 0.5, rng), R, r);
    const DependencyGraph g = build_dependency_graph(cells);
    std::vector<std::vector<Vector>> pool(cells.size());
    std::size_t filled = 0;
    while (filled < cells.size()) {
      const Vector x = uniform_in_annulus(d, r, R, rng);
      auto& bucket = pool[cells.cell_of(x)];
      if (bucket.size() < 200) {
        bucket.push_back(x);
        if (bucket.size() == 200) ++filled;
      }
    }
    std::vector<std::pair<std::size_t, std::size_t>> non_edges;
    for (std::size_t a = 0; a < g.m; ++a) {
      for (std::size_t b = a + 1; b < g.m; ++b) {
        if (!g.adjacent(a, b)) non_edges.emplace_back(a, b);
      }
    }
    REQUIRE(non_edges.size() > 0);
    std::size_t paths = 0;
    for (int t = 0; t < 1000; ++t) {
      const auto [a, b] = non_edges[rng.below(non_edges.size())];
      for (int k = 0; k < 1000; ++k) {
        const Vector& ai = pool[a][rng.below(200)];
        const Vector& aj = pool[b][rng.below(200)];
        const Vector mid = uniform_in_annulus(d, r, R, rng);
        if (geom::segment_avoids_ball(ai, mid, r) && geom::segment_avoids_ball(mid, aj, r)) ++paths;
      }
    }
    CHECK(paths == 0);
  }
}

TEST_CASE("sandwich caps") {
  const Vector y = geom::make_vector({0.0, 5.0});
  const SandwichCap cap = sandwich_cap(y, 5.0, 1.0);
  CHECK(cap.contains(geom::make_vector({0.0, 5.05})));
  CHECK_FALSE(cap.contains(geom::make_vector({0.0, 4.95})));
  CHECK_FALSE(cap.contains(geom::make_vector({1.01, 5.0})));
  CHECK(sandwich_cap_mass(cap, 2, 1e9) == doctest::Approx(sampling::cap_mass(5.0, std::sqrt(26.0), 2)));

  const auto radii = models::RadiiBundle::make(2, 3.0, models::Constants{});
  int hits = 0;
  for (int t = 0; t < 200; ++t) {
    hits += sandwich_trial(models::ModelSpec{models::ModelKind::truncated, 2, 3.0, 0.0}, radii,
                           RngStream(23, sampling::trial_stream(static_cast<std::uint64_t>(t))))
                ? 1
                : 0;
  }
  CHECK(hits < 20);
  bool rejected = false;
  try {
    (void)sandwich_trial(models::ModelSpec{models::ModelKind::gaussian, 2, 1024.0, 0.0}, radii, RngStream(23, 0));
  } catch (const Error& e) {
    rejected = e.code() == Errc::config_invalid;
  }
  CHECK(rejected);
}
