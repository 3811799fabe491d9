#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gpl {

/// Failure categories raised across the library. Callers that resample
/// (degenerate hulls) or report (config errors) switch on these.
enum class Errc {
  degenerate_input,
  dimension_mismatch,
  empty_interior,
  invalid_dimension,
  bad_frame,
  singular_generators,
  origin_outside,
  rejection_stall,
  quadrature_failure,
  radicand_negative,
  rho_too_small,
  frame_construction_failure,
  condition_b_violated,
  degenerate_variance,
  non_positive_value,
  io_failure,
  config_invalid,
};

std::string_view to_string(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace gpl
