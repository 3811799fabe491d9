#include "gpl/error.hpp"

namespace gpl {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::degenerate_input: return "DegenerateInput";
    case Errc::dimension_mismatch: return "DimensionMismatch";
    case Errc::empty_interior: return "EmptyInterior";
    case Errc::invalid_dimension: return "InvalidDimension";
    case Errc::bad_frame: return "BadFrame";
    case Errc::singular_generators: return "SingularGenerators";
    case Errc::origin_outside: return "OriginOutside";
    case Errc::rejection_stall: return "RejectionStall";
    case Errc::quadrature_failure: return "QuadratureFailure";
    case Errc::radicand_negative: return "RadicandNegative";
    case Errc::rho_too_small: return "RhoTooSmall";
    case Errc::frame_construction_failure: return "FrameConstructionFailure";
    case Errc::condition_b_violated: return "ConditionBViolated";
    case Errc::degenerate_variance: return "DegenerateVariance";
    case Errc::non_positive_value: return "NonPositiveValue";
    case Errc::io_failure: return "IoFailure";
    case Errc::config_invalid: return "ConfigInvalid";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace gpl
