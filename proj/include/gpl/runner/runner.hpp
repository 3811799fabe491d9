#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "gpl/runner/config.hpp"
#include "gpl/runner/experiments.hpp"

namespace gpl::runner {

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kArtifactVersion = "1.0.0";

/// Column order of summary.csv.
inline constexpr const char* kSummaryCsvHeader = "n,metric,estimate,stderr,count";

struct RunManifest {
  ExperimentConfig config;
  std::vector<std::uint64_t> grid_seeds;
  double wall_clock_seconds = 0.0;
  std::vector<SummaryRow> summary;
  std::vector<stats::Verdict> verdicts;
  std::vector<std::string> failures;
  nlohmann::json extra = nlohmann::json::object();
  /// FNV-1a of trials.csv, summary.csv and verdicts.json; wall-clock is
  /// not hashed.
  std::string hash;
};

/// Runs the experiment and, when config.out_dir is set, writes trials.csv,
/// summary.csv, manifest.json, verdicts.json and any side files there.
/// Throws Error(io_failure) if a file cannot be written.
RunManifest run(const ExperimentConfig& config);

std::string trials_csv(const std::vector<models::TrialRecord>& records);
std::string summary_csv(const std::vector<SummaryRow>& rows);
nlohmann::json verdicts_json(const std::vector<stats::Verdict>& verdicts);

nlohmann::json to_json(const RunManifest& m);
/// Throws Error(config_invalid) on a malformed manifest.
RunManifest manifest_from_json(const nlohmann::json& j);

/// Writes one tidy CSV per figure of the manifest's experiment into `dir`
/// and returns the paths written. A manifest without summary rows yields no
/// files. Throws Error(io_failure).
std::vector<std::string> emit_plotdata(const RunManifest& m, const std::string& dir);

/// Writes `content` to `path`, creating parent directories.
void write_file(const std::string& path, const std::string& content);

}  // namespace gpl::runner
