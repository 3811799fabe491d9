#pragma once

#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include "json.hpp"
#include "gpl/models/model.hpp"
#include "gpl/runner/config.hpp"
#include "gpl/stats/verdict.hpp"

namespace gpl::runner {

/// One line of summary.csv: a named per-n quantity.
struct SummaryRow {
  double n = 0.0;
  std::string metric;
  double estimate = 0.0;
  double stderr_value = std::numeric_limits<double>::quiet_NaN();
  std::size_t count = 0;
};

/// An extra output file written next to the standard ones.
struct SideFile {
  std::string name;
  std::string content;
};

struct ExperimentResult {
  std::vector<models::TrialRecord> records;
  std::vector<SummaryRow> summary;
  std::vector<stats::Verdict> verdicts;
  /// "n=<n> trial=<t>: <message>" for every trial that was skipped.
  std::vector<std::string> failures;
  nlohmann::json extra = nlohmann::json::object();
  std::vector<SideFile> side_files;

  const SummaryRow* find(double n, const std::string& metric) const;
};

/// Runs the experiment named by config.kind. Single-trial failures are
/// recorded in `failures` and skipped. Throws Error(config_invalid) for an
/// invalid config.
ExperimentResult run_experiment(const ExperimentConfig& config);

}  // namespace gpl::runner
