#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "gpl/geom/polytope.hpp"
#include "gpl/geom/types.hpp"
#include "gpl/models/radii.hpp"
#include "gpl/sampling/rng.hpp"

namespace gpl::models {

/// Gaussian: hull of n normal points. Truncated: hull of n draws from the
/// normal conditioned on B(R). Poisson: hull of Poisson(n) truncated draws.
enum class ModelKind { gaussian, truncated, poisson };

std::string to_string(ModelKind k);
ModelKind parse_model_kind(const std::string& s);

struct ModelSpec {
  ModelKind kind = ModelKind::gaussian;
  int d = 2;
  double n = 1024;
  double c0 = 0.0;  // <= 0 selects 100 d

  void validate() const;
};

struct FunctionalValues {
  double vol = 0.0;
  std::vector<std::size_t> f;  // f_0 .. f_{d-1}
  double surface_area = 0.0;
  double prob_content = std::numeric_limits<double>::quiet_NaN();
  double prob_content_se = std::numeric_limits<double>::quiet_NaN();
};

struct TrialRecord {
  ModelSpec model;
  std::uint64_t seed = 0;
  std::uint64_t stream_id = 0;
  std::size_t realized_count = 0;
  FunctionalValues values;
  bool sandwich_ok = false;
  int degenerate_resampled = 0;
};

/// A generated trial: the sample, its hull, and the record.
struct Trial {
  geom::PointSet points;
  geom::Polytope hull;
  TrialRecord record;
};

struct GenerateOptions {
  bool prob_content = false;
  std::size_t prob_content_darts = 100000;
};

/// Draws a sample from the model and hulls it. A degenerate sample is
/// redrawn on stream ids stream_id + 1, + 2, + 3; after that the
/// Error(degenerate_input) propagates.
Trial generate(const ModelSpec& spec, const RadiiBundle& radii, const sampling::RngStream& rng,
               const GenerateOptions& opts = {});

/// Volume, f-vector and surface area exactly; probability content by
/// Gaussian darts when requested.
FunctionalValues evaluate_functionals(const geom::Polytope& p, sampling::RngStream& rng, const GenerateOptions& opts = {});

/// One stream of n_prime truncated points; the first record hulls the
/// n-prefix, the second all n_prime points. The prefix hull is grown in
/// place, so both hulls see bit-identical prefix points.
std::pair<TrialRecord, TrialRecord> coupled_run(int d, std::size_t n, std::size_t n_prime, const RadiiBundle& radii,
                                                const sampling::RngStream& rng);

/// The Gaussian and truncated models on one normal stream: K_n takes the
/// first n draws, K'_n the first n draws inside B(R). Both hulls coincide
/// unless one of the first n draws leaves B(R).
std::pair<TrialRecord, TrialRecord> truncation_coupled_run(int d, std::size_t n, const RadiiBundle& radii,
                                                           const sampling::RngStream& rng);

}  // namespace gpl::models
