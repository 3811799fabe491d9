#pragma once

#include <limits>
#include <optional>
#include <string>

#include "json.hpp"

namespace gpl::stats {

/// One pass/fail judgement: `estimate` compared with `threshold` under the
/// rule named by `comparison` ("<=", ">=", "covers", "within", ...).
struct Verdict {
  std::string metric;
  double estimate = std::numeric_limits<double>::quiet_NaN();
  std::optional<double> stderr_value;
  std::optional<double> ci_low;
  std::optional<double> ci_high;
  double threshold = std::numeric_limits<double>::quiet_NaN();
  std::optional<double> threshold_high;
  std::string comparison;
  bool pass = false;
  std::string note;
};

Verdict verdict_at_most(std::string metric, double estimate, double threshold);
Verdict verdict_at_least(std::string metric, double estimate, double threshold);
Verdict verdict_within(std::string metric, double estimate, double lo, double hi);
Verdict verdict_covers(std::string metric, double estimate, double ci_low, double ci_high, double target);

nlohmann::json to_json(const Verdict& v);

}  // namespace gpl::stats
