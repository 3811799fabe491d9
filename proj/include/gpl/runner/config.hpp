#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "gpl/models/model.hpp"
#include "gpl/models/radii.hpp"

namespace gpl::runner {

enum class ExperimentKind { clt, var_scaling, expectation, sandwich, depgraph, coupling, event_A, cell_decomp };

std::string to_string(ExperimentKind k);
/// Throws Error(config_invalid) naming the field "experiment".
ExperimentKind parse_experiment_kind(const std::string& s);

struct Functional {
  enum class Kind { vol, f, surface, prob_content };
  Kind kind = Kind::vol;
  int s = 0;

  /// "vol", "f<s>" or "f_<s>", "surface", "prob-content".
  static Functional parse(const std::string& text);
  std::string name() const;
  double value(const models::TrialRecord& r) const;
};

struct ExperimentConfig {
  ExperimentKind kind = ExperimentKind::clt;
  models::ModelKind model = models::ModelKind::gaussian;
  int d = 2;
  std::vector<double> n_grid;
  std::size_t trials = 100;
  std::uint64_t seed = 1;
  Functional functional;
  models::Constants constants;
  std::string out_dir;
  /// Darts per trial for prob-content and cell volumes.
  std::size_t darts = 100000;
  /// Worker threads; 0 reads GPL_THREADS, else hardware concurrency.
  unsigned threads = 0;

  /// Throws Error(config_invalid) with the offending field first in the
  /// message, e.g. "trials: must be at least 2".
  void validate() const;
};

/// Calibrated constants for an experiment kind, used wherever the command
/// line leaves a constant unset.
models::Constants default_constants(ExperimentKind kind);

/// Model an experiment uses when none is given.
models::ModelKind default_model(ExperimentKind kind);

nlohmann::json to_json(const ExperimentConfig& c);
ExperimentConfig config_from_json(const nlohmann::json& j);

/// Seed of grid point k, derived from the master seed.
std::uint64_t grid_seed(std::uint64_t master, std::size_t k);

}  // namespace gpl::runner
