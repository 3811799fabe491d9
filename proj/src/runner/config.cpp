#include "gpl/runner/config.hpp"

#include <cmath>
#include <sstream>

#include "gpl/error.hpp"
#include "gpl/runner/calibration.hpp"

namespace gpl::runner {

namespace {

[[noreturn]] void invalid(const std::string& field, const std::string& why) {
  throw Error(Errc::config_invalid, field + ": " + why);
}

constexpr std::pair<ExperimentKind, const char*> kKindNames[] = {
    {ExperimentKind::clt, "clt"},
    {ExperimentKind::var_scaling, "var-scaling"},
    {ExperimentKind::expectation, "expectation"},
    {ExperimentKind::sandwich, "sandwich"},
    {ExperimentKind::depgraph, "depgraph"},
    {ExperimentKind::coupling, "coupling"},
    {ExperimentKind::event_A, "event-A"},
    {ExperimentKind::cell_decomp, "cell-decomp"},
};

}  // namespace

std::string to_string(ExperimentKind k) {
  for (const auto& [kind, name] : kKindNames) {
    if (kind == k) return name;
  }
  return "unknown";
}

ExperimentKind parse_experiment_kind(const std::string& s) {
  for (const auto& [kind, name] : kKindNames) {
    if (s == name) return kind;
  }
  invalid("experiment", "unknown kind '" + s + "'");
}

Functional Functional::parse(const std::string& text) {
  if (text == "vol") return {Kind::vol, 0};
  if (text == "surface") return {Kind::surface, 0};
  if (text == "prob-content") return {Kind::prob_content, 0};
  if (text.size() >= 2 && text[0] == 'f') {
    const std::string digits = text.substr(text[1] == '_' ? 2 : 1);
    if (!digits.empty() && digits.find_first_not_of("0123456789") == std::string::npos) {
      return {Kind::f, std::stoi(digits)};
    }
  }
  invalid("functional", "expected vol, f<s>, surface or prob-content, got '" + text + "'");
}

std::string Functional::name() const {
  switch (kind) {
    case Kind::vol:
      return "vol";
    case Kind::f:
      return "f" + std::to_string(s);
    case Kind::surface:
      return "surface";
    case Kind::prob_content:
      return "prob-content";
  }
  return "vol";
}

double Functional::value(const models::TrialRecord& r) const {
  switch (kind) {
    case Kind::vol:
      return r.values.vol;
    case Kind::f:
      return static_cast<double>(r.values.f.at(static_cast<std::size_t>(s)));
    case Kind::surface:
      return r.values.surface_area;
    case Kind::prob_content:
      return r.values.prob_content;
  }
  return r.values.vol;
}

void ExperimentConfig::validate() const {
  if (d < 2 || d > 8) invalid("d", "must lie in [2, 8]");
  if (trials < 2) invalid("trials", "must be at least 2");
  if (n_grid.empty()) invalid("n_grid", "must not be empty");
  for (std::size_t k = 0; k < n_grid.size(); ++k) {
    if (!(n_grid[k] >= d + 1.0) || !std::isfinite(n_grid[k])) invalid("n_grid", "every n must be finite and at least d+1");
    if (n_grid[k] != std::floor(n_grid[k])) invalid("n_grid", "every n must be an integer");
    if (k > 0 && !(n_grid[k] > n_grid[k - 1])) invalid("n_grid", "must be strictly increasing");
  }
  if (functional.kind == Functional::Kind::f && (functional.s < 0 || functional.s > d - 1)) {
    invalid("functional", "face dimension must lie in [0, d-1]");
  }
  if (!(constants.c > 0.0)) invalid("c", "must be positive");
  if (!(constants.c1 > 0.0)) invalid("c1", "must be positive");
  if (!(constants.b1 > 0.0)) invalid("b1", "must be positive");
  if (!(constants.b2 > 0.0 && constants.b2 < 1.0)) invalid("b2", "must lie in (0, 1)");
  if (!(constants.c2 > 0.0)) invalid("c2", "must be positive");
  if (constants.c0 < 0.0) invalid("c0", "must be nonnegative (0 selects 100 d)");
  if (darts == 0) invalid("darts", "must be positive");
  const bool needs_truncation = kind == ExperimentKind::sandwich || kind == ExperimentKind::cell_decomp;
  if (needs_truncation && model == models::ModelKind::gaussian) {
    invalid("model", "this experiment needs the truncated or Poisson model");
  }
  if (kind == ExperimentKind::event_A && model != models::ModelKind::gaussian) {
    invalid("model", "event-A uses the Gaussian model");
  }
}

models::Constants default_constants(ExperimentKind kind) {
  models::Constants k;
  switch (kind) {
    case ExperimentKind::sandwich:
      k.c = calibration::kSandwichC;
      k.c1 = calibration::kSandwichC1;
      break;
    case ExperimentKind::depgraph:
      k.c0 = calibration::kDepgraphC0;
      k.c1 = calibration::kDepgraphC1;
      break;
    case ExperimentKind::cell_decomp:
      k.c = calibration::kCellC;
      k.c1 = calibration::kCellC1;
      k.c2 = calibration::kCellC2;
      break;
    case ExperimentKind::event_A:
      k.b1 = calibration::kEventB1;
      k.b2 = calibration::kEventB2;
      break;
    default:
      break;
  }
  return k;
}

models::ModelKind default_model(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::sandwich:
      return models::ModelKind::truncated;
    case ExperimentKind::cell_decomp:
      return models::ModelKind::poisson;
    default:
      return models::ModelKind::gaussian;
  }
}

nlohmann::json to_json(const ExperimentConfig& c) {
  const auto& k = c.constants;
  return {{"experiment", to_string(c.kind)},
          {"model", models::to_string(c.model)},
          {"d", c.d},
          {"n_grid", c.n_grid},
          {"trials", c.trials},
          {"seed", c.seed},
          {"functional", c.functional.name()},
          {"constants",
           {{"c0", k.c0_for(c.d)}, {"c", k.c}, {"c1", k.c1}, {"b1", k.b1}, {"b2", k.b2}, {"c2", k.c2}, {"A", k.A}}},
          {"darts", c.darts}};
}

ExperimentConfig config_from_json(const nlohmann::json& j) {
  ExperimentConfig c;
  try {
    c.kind = parse_experiment_kind(j.at("experiment").get<std::string>());
    c.model = models::parse_model_kind(j.at("model").get<std::string>());
    c.d = j.at("d").get<int>();
    c.n_grid = j.at("n_grid").get<std::vector<double>>();
    c.trials = j.at("trials").get<std::size_t>();
    c.seed = j.at("seed").get<std::uint64_t>();
    c.functional = Functional::parse(j.at("functional").get<std::string>());
    const auto& k = j.at("constants");
    c.constants = {k.at("c0").get<double>(), k.at("c").get<double>(),  k.at("c1").get<double>(),
                   k.at("b1").get<double>(), k.at("b2").get<double>(), k.at("c2").get<double>(),
                   k.at("A").get<double>()};
    c.darts = j.value("darts", std::size_t{100000});
  } catch (const nlohmann::json::exception& e) {
    invalid("config", e.what());
  }
  return c;
}

std::uint64_t grid_seed(std::uint64_t master, std::size_t k) {
  // splitmix64 finalizer on (master, k).
  std::uint64_t z = master + 0x9E3779B97F4A7C15ull * (static_cast<std::uint64_t>(k) + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

}  // namespace gpl::runner
