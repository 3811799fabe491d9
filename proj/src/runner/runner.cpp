#include "gpl/runner/runner.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "gpl/error.hpp"
#include "gpl/models/trial_record.hpp"

namespace gpl::runner {

namespace fs = std::filesystem;

namespace {

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

std::uint64_t fnv1a(std::uint64_t h, const std::string& s) {
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string number_field(double x) { return std::isfinite(x) ? models::format_double(x) : ""; }

}  // namespace

void write_file(const std::string& path, const std::string& content) {
  try {
    const fs::path p(path);
    if (p.has_parent_path()) fs::create_directories(p.parent_path());
    std::ofstream out(p, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(Errc::io_failure, "cannot open " + path);
    out << content;
    out.flush();
    if (!out) throw Error(Errc::io_failure, "cannot write " + path);
  } catch (const fs::filesystem_error& e) {
    throw Error(Errc::io_failure, e.what());
  }
}

std::string trials_csv(const std::vector<models::TrialRecord>& records) {
  std::string out = std::string(models::kTrialCsvHeader) + "\n";
  for (const auto& r : records) out += models::to_csv_row(r) + "\n";
  return out;
}

std::string summary_csv(const std::vector<SummaryRow>& rows) {
  std::ostringstream out;
  out << kSummaryCsvHeader << '\n';
  for (const auto& r : rows) {
    out << static_cast<long long>(r.n) << ',' << r.metric << ',' << number_field(r.estimate) << ','
        << number_field(r.stderr_value) << ',' << r.count << '\n';
  }
  return out.str();
}

nlohmann::json verdicts_json(const std::vector<stats::Verdict>& verdicts) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& v : verdicts) j.push_back(stats::to_json(v));
  return j;
}

RunManifest run(const ExperimentConfig& config) {
  config.validate();
  const auto start = std::chrono::steady_clock::now();
  ExperimentResult res = run_experiment(config);
  RunManifest m;
  m.config = config;
  for (std::size_t k = 0; k < config.n_grid.size(); ++k) m.grid_seeds.push_back(grid_seed(config.seed, k));
  m.summary = std::move(res.summary);
  m.verdicts = std::move(res.verdicts);
  m.failures = std::move(res.failures);
  m.extra = std::move(res.extra);

  const std::string trials = trials_csv(res.records);
  const std::string summary = summary_csv(m.summary);
  const std::string verdicts = verdicts_json(m.verdicts).dump(1) + "\n";
  std::uint64_t h = 1469598103934665603ull;
  h = fnv1a(h, trials);
  h = fnv1a(h, summary);
  h = fnv1a(h, verdicts);
  m.hash = hex64(h);
  m.wall_clock_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  if (!config.out_dir.empty()) {
    const fs::path dir(config.out_dir);
    write_file((dir / "trials.csv").string(), trials);
    write_file((dir / "summary.csv").string(), summary);
    write_file((dir / "verdicts.json").string(), verdicts);
    for (const auto& f : res.side_files) write_file((dir / f.name).string(), f.content);
    write_file((dir / "manifest.json").string(), to_json(m).dump(1) + "\n");
  }
  return m;
}

nlohmann::json to_json(const RunManifest& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : m.summary) {
    rows.push_back({{"n", r.n},
                    {"metric", r.metric},
                    {"estimate", std::isfinite(r.estimate) ? nlohmann::json(r.estimate) : nlohmann::json(nullptr)},
                    {"stderr", std::isfinite(r.stderr_value) ? nlohmann::json(r.stderr_value) : nlohmann::json(nullptr)},
                    {"count", r.count}});
  }
  return {{"schema_version", kSchemaVersion},
          {"artifact_version", kArtifactVersion},
          {"config", to_json(m.config)},
          {"grid_seeds", m.grid_seeds},
          {"wall_clock_seconds", m.wall_clock_seconds},
          {"summary", rows},
          {"verdicts", verdicts_json(m.verdicts)},
          {"failures", m.failures},
          {"extra", m.extra},
          {"hash", m.hash}};
}

RunManifest manifest_from_json(const nlohmann::json& j) {
  RunManifest m;
  try {
    if (j.at("schema_version").get<int>() != kSchemaVersion) {
      throw Error(Errc::config_invalid, "schema_version: unsupported");
    }
    m.config = config_from_json(j.at("config"));
    m.grid_seeds = j.at("grid_seeds").get<std::vector<std::uint64_t>>();
    m.wall_clock_seconds = j.value("wall_clock_seconds", 0.0);
    auto num = [](const nlohmann::json& v) {
      return v.is_null() ? std::numeric_limits<double>::quiet_NaN() : v.get<double>();
    };
    for (const auto& r : j.at("summary")) {
      m.summary.push_back({r.at("n").get<double>(), r.at("metric").get<std::string>(), num(r.at("estimate")),
                           num(r.at("stderr")), r.at("count").get<std::size_t>()});
    }
    for (const auto& v : j.at("verdicts")) {
      stats::Verdict out;
      out.metric = v.at("metric").get<std::string>();
      out.estimate = num(v.at("estimate"));
      out.threshold = num(v.at("threshold"));
      out.comparison = v.at("comparison").get<std::string>();
      out.pass = v.at("pass").get<bool>();
      if (v.contains("stderr")) out.stderr_value = num(v["stderr"]);
      if (v.contains("ci")) {
        out.ci_low = num(v["ci"][0]);
        out.ci_high = num(v["ci"][1]);
      }
      if (v.contains("threshold_high")) out.threshold_high = num(v["threshold_high"]);
      out.note = v.value("note", "");
      m.verdicts.push_back(out);
    }
    m.failures = j.value("failures", std::vector<std::string>{});
    m.extra = j.value("extra", nlohmann::json::object());
    m.hash = j.at("hash").get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::config_invalid, std::string("manifest: ") + e.what());
  }
  return m;
}

}  // namespace gpl::runner
