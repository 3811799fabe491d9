#pragma once

#include <string>

#include "json.hpp"
#include "gpl/models/model.hpp"

namespace gpl::models {

/// Column order of trials.csv. The f-vector is one field, its entries
/// joined by ';'. Missing probability content is written as an empty field.
inline constexpr const char* kTrialCsvHeader =
    "kind,d,n,c0,seed,stream_id,realized_count,vol,surface_area,prob_content,prob_content_se,sandwich_ok,"
    "degenerate_resampled,f_vector";

std::string to_csv_row(const TrialRecord& r);

nlohmann::json to_json(const TrialRecord& r);
TrialRecord trial_record_from_json(const nlohmann::json& j);

/// Shortest round-trip decimal form of a double.
std::string format_double(double x);

}  // namespace gpl::models
