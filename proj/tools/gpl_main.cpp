// gpl: command-line front end of the Gaussian polytope lab.

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gpl/error.hpp"
#include "gpl/runner/config.hpp"
#include "gpl/runner/runner.hpp"

namespace {

using gpl::runner::ExperimentConfig;
using gpl::runner::ExperimentKind;

// Accepts "1024,4096", "2^10,2^12" and "2^10..2^17" (every power between).
std::vector<double> parse_grid(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  auto value = [](const std::string& tok) -> std::pair<double, int> {
    const auto caret = tok.find('^');
    if (caret == std::string::npos) return {std::stod(tok), -1};
    const int base = std::stoi(tok.substr(0, caret));
    const int exp = std::stoi(tok.substr(caret + 1));
    if (base != 2) throw gpl::Error(gpl::Errc::config_invalid, "n_grid: only powers of 2 are supported");
    return {std::ldexp(1.0, exp), exp};
  };
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      const auto dots = item.find("..");
      if (dots == std::string::npos) {
        out.push_back(value(item).first);
        continue;
      }
      const int elo = value(item.substr(0, dots)).second;
      const int ehi = value(item.substr(dots + 2)).second;
      if (elo < 0 || ehi < 0) throw gpl::Error(gpl::Errc::config_invalid, "n_grid: ranges need 2^a..2^b");
      for (int e = elo; e <= ehi; ++e) out.push_back(std::ldexp(1.0, e));
    } catch (const std::logic_error&) {
      throw gpl::Error(gpl::Errc::config_invalid, "n_grid: cannot parse '" + item + "'");
    }
  }
  return out;
}

struct Options {
  int d = 2;
  std::string grid = "2^10,2^12,2^14";
  std::size_t trials = 100;
  std::uint64_t seed = 1;
  std::string functional = "vol";
  std::string model;
  std::optional<double> c0, c, c1, b1, b2, c2, A;
  std::size_t darts = 100000;
  unsigned threads = 0;
  std::string out;
  bool plotdata = false;
};

void add_run_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--d", o.d, "dimension")->capture_default_str();
  cmd->add_option("--n-grid", o.grid, "sample sizes, e.g. 2^10..2^17 or 1024,4096")->capture_default_str();
  cmd->add_option("--trials", o.trials, "trials per grid point")->capture_default_str();
  cmd->add_option("--seed", o.seed, "master seed")->capture_default_str();
  cmd->add_option("--functional", o.functional, "vol | f<s> | surface | prob-content")->capture_default_str();
  cmd->add_option("--model", o.model, "gaussian | truncated | poisson (default depends on the experiment)");
  cmd->add_option("--c0", o.c0, "truncation constant (default 100 d)");
  cmd->add_option("--c", o.c, "sandwich net constant c");
  cmd->add_option("--c1", o.c1, "net separation constant c1");
  cmd->add_option("--b1", o.b1, "simplex net separation constant b1");
  cmd->add_option("--b2", o.b2, "homothety factor b2");
  cmd->add_option("--c2", o.c2, "cell load constant c2");
  cmd->add_option("--A", o.A, "constant A");
  cmd->add_option("--darts", o.darts, "Monte Carlo darts per trial")->capture_default_str();
  cmd->add_option("--threads", o.threads, "worker threads (default GPL_THREADS or all cores)");
  cmd->add_option("--out", o.out, "output directory")->required();
  cmd->add_flag("--plotdata", o.plotdata, "also write the plot tables");
}

ExperimentConfig make_config(ExperimentKind kind, const Options& o) {
  ExperimentConfig cfg;
  cfg.kind = kind;
  cfg.model = o.model.empty() ? gpl::runner::default_model(kind) : gpl::models::parse_model_kind(o.model);
  cfg.d = o.d;
  cfg.n_grid = parse_grid(o.grid);
  cfg.trials = o.trials;
  cfg.seed = o.seed;
  cfg.functional = gpl::runner::Functional::parse(o.functional);
  cfg.constants = gpl::runner::default_constants(kind);
  if (o.c0) cfg.constants.c0 = *o.c0;
  if (o.c) cfg.constants.c = *o.c;
  if (o.c1) cfg.constants.c1 = *o.c1;
  if (o.b1) cfg.constants.b1 = *o.b1;
  if (o.b2) cfg.constants.b2 = *o.b2;
  if (o.c2) cfg.constants.c2 = *o.c2;
  if (o.A) cfg.constants.A = *o.A;
  cfg.darts = o.darts;
  cfg.threads = o.threads;
  cfg.out_dir = o.out;
  return cfg;
}

int report(const gpl::runner::RunManifest& m) {
  for (const auto& v : m.verdicts) {
    std::cout << (v.pass ? "PASS " : "FAIL ") << v.metric << " estimate=" << v.estimate << ' ' << v.comparison << ' '
              << v.threshold;
    if (v.threshold_high) std::cout << ".." << *v.threshold_high;
    if (v.ci_low) std::cout << " ci=[" << *v.ci_low << ", " << *v.ci_high << ']';
    std::cout << '\n';
  }
  if (!m.failures.empty()) std::cout << m.failures.size() << " trial(s) skipped, see manifest.json\n";
  std::cout << "hash " << m.hash << "  (" << m.wall_clock_seconds << " s)\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gaussian random polytope lab"};
  app.require_subcommand(1);
  Options opts;
  const std::pair<ExperimentKind, const char*> kinds[] = {
      {ExperimentKind::clt, "KS distance of the standardized functional to the normal law"},
      {ExperimentKind::var_scaling, "variance of the functional against ln ln n"},
      {ExperimentKind::expectation, "mean f_s and volume against their leading terms"},
      {ExperimentKind::sandwich, "frequency of B(r) inside the hull"},
      {ExperimentKind::depgraph, "net size and degree of the dependency graph"},
      {ExperimentKind::coupling, "coupling distances between paired models"},
      {ExperimentKind::event_A, "probability of the simplex event A_i"},
      {ExperimentKind::cell_decomp, "cell decomposition of volume and faces"},
  };
  std::vector<std::pair<CLI::App*, ExperimentKind>> commands;
  for (const auto& [kind, help] : kinds) {
    CLI::App* cmd = app.add_subcommand(gpl::runner::to_string(kind), help);
    add_run_options(cmd, opts);
    commands.emplace_back(cmd, kind);
  }
  std::string manifest_path, plot_dir;
  CLI::App* plot = app.add_subcommand("plotdata", "write plot tables from a manifest");
  plot->add_option("--manifest", manifest_path, "manifest.json of a finished run")->required();
  plot->add_option("--out", plot_dir, "output directory")->required();

  CLI11_PARSE(app, argc, argv);
  try {
    if (plot->parsed()) {
      std::ifstream in(manifest_path);
      if (!in) throw gpl::Error(gpl::Errc::io_failure, "cannot read " + manifest_path);
      const auto m = gpl::runner::manifest_from_json(nlohmann::json::parse(in));
      const auto files = gpl::runner::emit_plotdata(m, plot_dir);
      if (files.empty()) std::cout << "manifest has no summary rows; no plot data written\n";
      for (const auto& f : files) std::cout << "wrote " << f << '\n';
      return 0;
    }
    for (const auto& [cmd, kind] : commands) {
      if (!cmd->parsed()) continue;
      const auto m = gpl::runner::run(make_config(kind, opts));
      if (opts.plotdata) {
        for (const auto& f : gpl::runner::emit_plotdata(m, opts.out)) std::cout << "wrote " << f << '\n';
      }
      return report(m);
    }
  } catch (const gpl::Error& e) {
    std::cerr << "gpl: " << gpl::to_string(e.code()) << ": " << e.what() << '\n';
    return e.code() == gpl::Errc::io_failure ? 3 : 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "gpl: malformed manifest: " << e.what() << '\n';
    return 2;
  }
  return 1;
}
