#include "gpl/stats/verdict.hpp"

#include <cmath>
#include <utility>

namespace gpl::stats {

Verdict verdict_at_most(std::string metric, double estimate, double threshold) {
  Verdict v;
  v.metric = std::move(metric);
  v.estimate = estimate;
  v.threshold = threshold;
  v.comparison = "<=";
  v.pass = estimate <= threshold;
  return v;
}

Verdict verdict_at_least(std::string metric, double estimate, double threshold) {
  Verdict v;
  v.metric = std::move(metric);
  v.estimate = estimate;
  v.threshold = threshold;
  v.comparison = ">=";
  v.pass = estimate >= threshold;
  return v;
}

Verdict verdict_within(std::string metric, double estimate, double lo, double hi) {
  Verdict v;
  v.metric = std::move(metric);
  v.estimate = estimate;
  v.threshold = lo;
  v.threshold_high = hi;
  v.comparison = "within";
  v.pass = lo <= estimate && estimate <= hi;
  return v;
}

Verdict verdict_covers(std::string metric, double estimate, double ci_low, double ci_high, double target) {
  Verdict v;
  v.metric = std::move(metric);
  v.estimate = estimate;
  v.ci_low = ci_low;
  v.ci_high = ci_high;
  v.threshold = target;
  v.comparison = "covers";
  v.pass = ci_low <= target && target <= ci_high;
  return v;
}

namespace {

nlohmann::json number(double x) {
  if (std::isfinite(x)) return x;
  return nullptr;
}

}  // namespace

nlohmann::json to_json(const Verdict& v) {
  nlohmann::json j{{"metric", v.metric},
                   {"estimate", number(v.estimate)},
                   {"threshold", number(v.threshold)},
                   {"comparison", v.comparison},
                   {"pass", v.pass}};
  if (v.stderr_value) j["stderr"] = number(*v.stderr_value);
  if (v.ci_low && v.ci_high) j["ci"] = {number(*v.ci_low), number(*v.ci_high)};
  if (v.threshold_high) j["threshold_high"] = number(*v.threshold_high);
  if (!v.note.empty()) j["note"] = v.note;
  return j;
}

}  // namespace gpl::stats
