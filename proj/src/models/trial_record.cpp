#include "gpl/models/trial_record.hpp"

#include <charconv>
#include <cmath>

namespace gpl::models {

std::string format_double(double x) {
  if (std::isnan(x)) return "";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::string to_csv_row(const TrialRecord& r) {
  std::string f;
  for (std::size_t s = 0; s < r.values.f.size(); ++s) {
    if (s) f += ';';
    f += std::to_string(r.values.f[s]);
  }
  std::string out;
  out += to_string(r.model.kind) + ',';
  out += std::to_string(r.model.d) + ',';
  out += format_double(r.model.n) + ',';
  out += format_double(r.model.c0) + ',';
  out += std::to_string(r.seed) + ',';
  out += std::to_string(r.stream_id) + ',';
  out += std::to_string(r.realized_count) + ',';
  out += format_double(r.values.vol) + ',';
  out += format_double(r.values.surface_area) + ',';
  out += format_double(r.values.prob_content) + ',';
  out += format_double(r.values.prob_content_se) + ',';
  out += std::string(r.sandwich_ok ? "1" : "0") + ',';
  out += std::to_string(r.degenerate_resampled) + ',';
  out += f;
  return out;
}

nlohmann::json to_json(const TrialRecord& r) {
  nlohmann::json j;
  j["model"] = {{"kind", to_string(r.model.kind)}, {"d", r.model.d}, {"n", r.model.n}, {"c_0", r.model.c0}};
  j["seed"] = r.seed;
  j["stream_id"] = r.stream_id;
  j["realized_count"] = r.realized_count;
  j["vol"] = r.values.vol;
  j["f"] = r.values.f;
  j["surface_area"] = r.values.surface_area;
  j["prob_content"] = std::isnan(r.values.prob_content) ? nlohmann::json() : nlohmann::json(r.values.prob_content);
  j["prob_content_se"] =
      std::isnan(r.values.prob_content_se) ? nlohmann::json() : nlohmann::json(r.values.prob_content_se);
  j["sandwich_ok"] = r.sandwich_ok;
  j["degenerate_resampled"] = r.degenerate_resampled;
  return j;
}

TrialRecord trial_record_from_json(const nlohmann::json& j) {
  TrialRecord r;
  r.model.kind = parse_model_kind(j.at("model").at("kind").get<std::string>());
  r.model.d = j.at("model").at("d").get<int>();
  r.model.n = j.at("model").at("n").get<double>();
  r.model.c0 = j.at("model").at("c_0").get<double>();
  r.seed = j.at("seed").get<std::uint64_t>();
  r.stream_id = j.at("stream_id").get<std::uint64_t>();
  r.realized_count = j.at("realized_count").get<std::size_t>();
  r.values.vol = j.at("vol").get<double>();
  r.values.f = j.at("f").get<std::vector<std::size_t>>();
  r.values.surface_area = j.at("surface_area").get<double>();
  if (!j.at("prob_content").is_null()) r.values.prob_content = j.at("prob_content").get<double>();
  if (!j.at("prob_content_se").is_null()) r.values.prob_content_se = j.at("prob_content_se").get<double>();
  r.sandwich_ok = j.at("sandwich_ok").get<bool>();
  r.degenerate_resampled = j.at("degenerate_resampled").get<int>();
  return r;
}

}  // namespace gpl::models
