#include <filesystem>
#include <sstream>

#include "gpl/models/trial_record.hpp"
#include "gpl/runner/runner.hpp"

namespace gpl::runner {

namespace {

struct Column {
  std::string header;
  std::string metric;
  enum class Field { estimate, stderr_value, count } field = Field::estimate;
};

const SummaryRow* lookup(const RunManifest& m, double n, const std::string& metric) {
  for (const auto& r : m.summary) {
    if (r.n == n && r.metric == metric) return &r;
  }
  return nullptr;
}

std::string table(const RunManifest& m, const std::vector<Column>& cols) {
  std::ostringstream out;
  out << "n";
  for (const auto& c : cols) out << ',' << c.header;
  out << '\n';
  for (double n : m.config.n_grid) {
    out << static_cast<long long>(n);
    for (const auto& c : cols) {
      out << ',';
      const SummaryRow* r = lookup(m, n, c.metric);
      if (!r) continue;
      switch (c.field) {
        case Column::Field::estimate:
          if (std::isfinite(r->estimate)) out << models::format_double(r->estimate);
          break;
        case Column::Field::stderr_value:
          if (std::isfinite(r->stderr_value)) out << models::format_double(r->stderr_value);
          break;
        case Column::Field::count:
          out << r->count;
          break;
      }
    }
    out << '\n';
  }
  return out.str();
}

using F = Column::Field;

}  // namespace

std::vector<std::string> emit_plotdata(const RunManifest& m, const std::string& dir) {
  std::vector<std::string> written;
  if (m.summary.empty()) return written;
  std::vector<std::pair<std::string, std::vector<Column>>> figures;
  switch (m.config.kind) {
    case ExperimentKind::clt:
      figures.push_back({"plot_clt.csv",
                         {{"N_trials", "ks", F::count}, {"ks", "ks", F::estimate}, {"ks_critical_0.01", "ks_critical_0.01", F::estimate}}});
      break;
    case ExperimentKind::var_scaling:
      figures.push_back({"plot_var.csv",
                         {{"mean", "mean", F::estimate}, {"var", "var", F::estimate}, {"var_stderr", "var", F::stderr_value}}});
      break;
    case ExperimentKind::expectation: {
      const int s = m.config.functional.kind == Functional::Kind::f ? m.config.functional.s : 0;
      const std::string f = "f" + std::to_string(s) + "_ratio";
      figures.push_back({"plot_expectation.csv",
                         {{"N_trials", "vol_ratio", F::count},
                          {f, f, F::estimate},
                          {f + "_se", f, F::stderr_value},
                          {"vol_ratio", "vol_ratio", F::estimate},
                          {"vol_ratio_se", "vol_ratio", F::stderr_value}}});
      break;
    }
    case ExperimentKind::sandwich:
      figures.push_back({"plot_frequency.csv",
                         {{"N_trials", "freq", F::count}, {"freq", "freq", F::estimate}, {"freq_se", "freq", F::stderr_value}}});
      break;
    case ExperimentKind::event_A:
      figures.push_back({"plot_frequency.csv",
                         {{"N_trials", "freq", F::count},
                          {"freq", "freq", F::estimate},
                          {"freq_se", "freq", F::stderr_value},
                          {"p_semi_analytic", "p_semi_analytic", F::estimate},
                          {"p_semi_analytic_se", "p_semi_analytic", F::stderr_value}}});
      break;
    case ExperimentKind::depgraph:
      figures.push_back({"plot_depgraph.csv",
                         {{"m", "m", F::estimate},
                          {"D", "D", F::estimate},
                          {"D_over_m", "D_over_m", F::estimate},
                          {"m_ratio", "m_ratio", F::estimate},
                          {"D_ratio", "D_ratio", F::estimate}}});
      break;
    case ExperimentKind::coupling:
      figures.push_back({"plot_coupling.csv",
                         {{"trunc_eps1", "trunc_eps1", F::estimate},
                          {"trunc_eps2", "trunc_eps2", F::estimate},
                          {"trunc_eps3", "trunc_eps3", F::estimate},
                          {"trunc_threshold", "trunc_threshold", F::estimate},
                          {"growth_eps1", "growth_eps1", F::estimate},
                          {"growth_eps2", "growth_eps2", F::estimate},
                          {"growth_eps3", "growth_eps3", F::estimate},
                          {"growth_threshold", "growth_threshold", F::estimate},
                          {"growth_equal_fraction", "growth_equal_fraction", F::estimate}}});
      break;
    case ExperimentKind::cell_decomp:
      figures.push_back({"plot_frequency.csv",
                         {{"N_trials", "condition_B_freq", F::count},
                          {"freq", "condition_B_freq", F::estimate},
                          {"freq_se", "condition_B_freq", F::stderr_value}}});
      figures.push_back({"plot_rinott.csv",
                         {{"rinott_bound", "rinott_bound", F::estimate}, {"rinott_rate", "rinott_rate", F::estimate}}});
      break;
  }
  for (const auto& [name, cols] : figures) {
    const std::string path = (std::filesystem::path(dir) / name).string();
    write_file(path, table(m, cols));
    written.push_back(path);
  }
  return written;
}

}  // namespace gpl::runner
