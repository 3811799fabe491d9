#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "gpl/error.hpp"
#include "gpl/runner/config.hpp"
#include "gpl/runner/runner.hpp"

using namespace gpl;
using namespace gpl::runner;

namespace {

ExperimentConfig small_clt() {
  ExperimentConfig c;
  c.kind = ExperimentKind::clt;
  c.model = models::ModelKind::gaussian;
  c.d = 2;
  c.n_grid = {256, 512};
  c.trials = 40;
  c.seed = 11;
  c.constants = default_constants(c.kind);
  c.threads = 1;
  return c;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::filesystem::path scratch(const std::string& name) {
  auto p = std::filesystem::temp_directory_path() / ("gpl_test_" + name);
  std::filesystem::remove_all(p);
  return p;
}

}  // namespace

TEST_CASE("runs are reproducible from the seed") {
  auto c = small_clt();
  const auto a = run(c);
  const auto b = run(c);
  CHECK(a.hash == b.hash);
  CHECK(a.grid_seeds == b.grid_seeds);
  CHECK(a.grid_seeds.size() == 2);
  CHECK(a.grid_seeds[0] != a.grid_seeds[1]);

  // Thread count does not change the output.
  c.threads = 3;
  CHECK(run(c).hash == a.hash);

  c.seed = 12;
  CHECK(run(c).hash != a.hash);
}

TEST_CASE("invalid configs name the offending field") {
  auto expect_field = [](ExperimentConfig c, const std::string& field) {
    std::string message;
    try {
      run(c);
    } catch (const Error& e) {
      CHECK(e.code() == Errc::config_invalid);
      message = e.what();
    }
    CHECK(message.rfind("ConfigInvalid: " + field + ":", 0) == 0);
  };
  auto c = small_clt();
  c.trials = 1;
  expect_field(c, "trials");
  c = small_clt();
  c.d = 1;
  expect_field(c, "d");
  c = small_clt();
  c.n_grid.clear();
  expect_field(c, "n_grid");
}

TEST_CASE("written files and manifest round trip") {
  auto c = small_clt();
  const auto dir = scratch("files");
  c.out_dir = dir.string();
  const auto m = run(c);
  for (const char* f : {"trials.csv", "summary.csv", "manifest.json", "verdicts.json"})
    CHECK(std::filesystem::exists(dir / f));

  const std::string summary = slurp(dir / "summary.csv");
  CHECK(summary.rfind(std::string(kSummaryCsvHeader) + "\n", 0) == 0);

  const std::string trials = slurp(dir / "trials.csv");
  std::size_t lines = 0;
  for (char ch : trials) lines += ch == '\n';
  CHECK(lines == 1 + 2 * c.trials);

  const auto j = nlohmann::json::parse(slurp(dir / "manifest.json"));
  CHECK(j.at("schema_version") == kSchemaVersion);
  CHECK(j.at("hash") == m.hash);
  const auto back = manifest_from_json(j);
  CHECK(back.hash == m.hash);
  CHECK(back.grid_seeds == m.grid_seeds);
  CHECK(back.summary.size() == m.summary.size());
  CHECK(back.verdicts.size() == m.verdicts.size());
  CHECK(to_json(back.config) == to_json(m.config));
  std::filesystem::remove_all(dir);
}

TEST_CASE("plot data") {
  auto c = small_clt();
  const auto m = run(c);
  const auto dir = scratch("plots");
  const auto files = emit_plotdata(m, dir.string());
  REQUIRE(files.size() == 1);
  const std::string body = slurp(files[0]);
  CHECK(body.rfind("n,N_trials,ks,ks_critical_0.01\n", 0) == 0);
  std::size_t lines = 0;
  for (char ch : body) lines += ch == '\n';
  CHECK(lines == 3);

  RunManifest empty;
  empty.config = c;
  CHECK(emit_plotdata(empty, (dir / "empty").string()).empty());
  CHECK(!std::filesystem::exists(dir / "empty" / "plot_clt.csv"));
  std::filesystem::remove_all(dir);
}
