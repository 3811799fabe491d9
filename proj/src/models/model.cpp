#include "gpl/models/model.hpp"

#include <cmath>

#include "gpl/error.hpp"
#include "gpl/geom/hull.hpp"
#include "gpl/geom/predicates.hpp"
#include "gpl/sampling/samplers.hpp"

namespace gpl::models {

using geom::PointSet;
using geom::Polytope;
using sampling::RngStream;

std::string to_string(ModelKind k) {
  switch (k) {
    case ModelKind::gaussian: return "gaussian";
    case ModelKind::truncated: return "truncated";
    case ModelKind::poisson: return "poisson";
  }
  return "unknown";
}

ModelKind parse_model_kind(const std::string& s) {
  if (s == "gaussian") return ModelKind::gaussian;
  if (s == "truncated") return ModelKind::truncated;
  if (s == "poisson") return ModelKind::poisson;
  throw Error(Errc::config_invalid, "model: unknown kind '" + s + "'");
}

void ModelSpec::validate() const {
  if (d < 2 || d > geom::kMaxDim) throw Error(Errc::config_invalid, "d: must lie in [2, 8]");
  if (!(n >= d + 1)) throw Error(Errc::config_invalid, "n: must be at least d+1");
  if (c0 < 0.0) throw Error(Errc::config_invalid, "c0: must be positive");
}

namespace {

bool sandwiched(const Polytope& p, double r) {
  try {
    return geom::ball_contained_in(p, r);
  } catch (const Error& e) {
    if (e.code() == Errc::origin_outside) return false;
    throw;
  }
}

PointSet draw_points(const ModelSpec& spec, const RadiiBundle& radii, RngStream& rng) {
  const auto n = static_cast<std::size_t>(std::llround(spec.n));
  switch (spec.kind) {
    case ModelKind::gaussian: return sampling::sample_gaussian(n, spec.d, rng);
    case ModelKind::truncated: return sampling::sample_truncated(n, sampling::make_truncated(spec.d, radii.R), rng);
    case ModelKind::poisson: {
      const auto count = static_cast<std::size_t>(sampling::sample_poisson_count(spec.n, rng));
      return sampling::sample_truncated(count, sampling::make_truncated(spec.d, radii.R), rng);
    }
  }
  return PointSet(spec.d);
}

TrialRecord make_record(const ModelSpec& spec, const RngStream& rng, std::size_t count, const Polytope& p,
                        FunctionalValues values, double r_sandwich, int resampled) {
  TrialRecord rec;
  rec.model = spec;
  rec.seed = rng.seed();
  rec.stream_id = rng.stream_id();
  rec.realized_count = count;
  rec.values = std::move(values);
  rec.sandwich_ok = sandwiched(p, r_sandwich);
  rec.degenerate_resampled = resampled;
  return rec;
}

// Runs `attempt` on stream ids base, base+1, ..., retrying on degenerate
// samples at most three times.
template <typename Attempt>
auto with_resampling(const RngStream& rng, Attempt&& attempt) {
  for (int k = 0;; ++k) {
    RngStream stream(rng.seed(), rng.stream_id() + static_cast<std::uint64_t>(k));
    try {
      return attempt(stream, k);
    } catch (const Error& e) {
      if (e.code() != Errc::degenerate_input || k >= 3) throw;
    }
  }
}

}  // namespace

FunctionalValues evaluate_functionals(const Polytope& p, RngStream& rng, const GenerateOptions& opts) {
  FunctionalValues v;
  v.vol = geom::volume(p);
  v.f = geom::f_vector(p);
  v.surface_area = geom::surface_area(p);
  if (opts.prob_content) {
    const int d = p.dim();
    std::size_t hits = 0;
    std::vector<double> x(static_cast<std::size_t>(d));
    for (std::size_t t = 0; t < opts.prob_content_darts; ++t) {
      for (auto& c : x) c = rng.normal();
      hits += p.contains(x) ? 1 : 0;
    }
    const double n = static_cast<double>(opts.prob_content_darts);
    v.prob_content = static_cast<double>(hits) / n;
    v.prob_content_se = std::sqrt(v.prob_content * (1.0 - v.prob_content) / n);
  }
  return v;
}

Trial generate(const ModelSpec& spec, const RadiiBundle& radii, const RngStream& rng, const GenerateOptions& opts) {
  spec.validate();
  return with_resampling(rng, [&](RngStream& stream, int k) {
    Trial t;
    t.points = draw_points(spec, radii, stream);
    t.hull = geom::convex_hull(t.points);
    FunctionalValues values = evaluate_functionals(t.hull, stream, opts);
    t.record = make_record(spec, stream, t.points.size(), t.hull, std::move(values), radii.r_sandwich, k);
    return t;
  });
}

std::pair<TrialRecord, TrialRecord> coupled_run(int d, std::size_t n, std::size_t n_prime, const RadiiBundle& radii,
                                                const RngStream& rng) {
  if (n > n_prime) throw Error(Errc::config_invalid, "coupled_run needs n <= n'");
  const ModelSpec small{ModelKind::truncated, d, static_cast<double>(n), radii.c0};
  const ModelSpec large{ModelKind::truncated, d, static_cast<double>(n_prime), radii.c0};
  small.validate();
  return with_resampling(rng, [&](RngStream& stream, int k) {
    const PointSet pts = sampling::sample_truncated(n_prime, sampling::make_truncated(d, radii.R), stream);
    geom::IncrementalHull hull(pts, n);
    const Polytope p = hull.polytope();
    TrialRecord a = make_record(small, stream, n, p, evaluate_functionals(p, stream), radii.r_sandwich, k);
    hull.extend(n_prime);
    const Polytope q = hull.polytope();
    TrialRecord b = make_record(large, stream, n_prime, q, evaluate_functionals(q, stream), radii.r_sandwich, k);
    return std::pair{std::move(a), std::move(b)};
  });
}

std::pair<TrialRecord, TrialRecord> truncation_coupled_run(int d, std::size_t n, const RadiiBundle& radii,
                                                           const RngStream& rng) {
  const ModelSpec gauss{ModelKind::gaussian, d, static_cast<double>(n), radii.c0};
  const ModelSpec trunc{ModelKind::truncated, d, static_cast<double>(n), radii.c0};
  gauss.validate();
  const double r2 = radii.R * radii.R;
  return with_resampling(rng, [&](RngStream& stream, int k) {
    PointSet all(d), inside(d);
    all.reserve(n);
    inside.reserve(n);
    std::vector<double> x(static_cast<std::size_t>(d));
    while (inside.size() < n) {
      for (auto& c : x) c = stream.normal();
      if (all.size() < n) all.push_back(x);
      if (geom::squared_norm(x) <= r2) inside.push_back(x);
    }
    const Polytope p = geom::convex_hull(all);
    const Polytope q = geom::convex_hull(inside);
    TrialRecord a = make_record(gauss, stream, n, p, evaluate_functionals(p, stream), radii.r_sandwich, k);
    TrialRecord b = make_record(trunc, stream, n, q, evaluate_functionals(q, stream), radii.r_sandwich, k);
    return std::pair{std::move(a), std::move(b)};
  });
}

}  // namespace gpl::models
