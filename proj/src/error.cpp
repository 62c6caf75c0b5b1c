#include "wga/error.hpp"

namespace wga {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonPositiveGamma: return "NonPositiveGamma";
    case ErrorCode::NonFiniteValue: return "NonFiniteValue";
    case ErrorCode::NegativeDissipation: return "NegativeDissipation";
    case ErrorCode::NotSingleMode: return "NotSingleMode";
    case ErrorCode::DefectiveMatrix: return "DefectiveMatrix";
    case ErrorCode::SingularShift: return "SingularShift";
    case ErrorCode::DivergentAmplitude: return "DivergentAmplitude";
    case ErrorCode::OnShellPole: return "OnShellPole";
    case ErrorCode::DegenerateJC: return "DegenerateJC";
    case ErrorCode::VanishingBackground: return "VanishingBackground";
    case ErrorCode::UnknownColumns: return "UnknownColumns";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
  }
  return "UnknownError";
}

bool is_config_error(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonPositiveGamma:
    case ErrorCode::NonFiniteValue:
    case ErrorCode::NegativeDissipation:
    case ErrorCode::NotSingleMode:
    case ErrorCode::UnknownColumns:
    case ErrorCode::InvalidConfig:
      return true;
    default:
      return false;
  }
}

}  // namespace wga
