#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace wga {

enum class ErrorCode {
  NonPositiveGamma,
  NonFiniteValue,
  NegativeDissipation,
  NotSingleMode,
  DefectiveMatrix,
  SingularShift,
  DivergentAmplitude,
  OnShellPole,
  DegenerateJC,
  VanishingBackground,
  UnknownColumns,
  InvalidConfig,
};

std::string_view to_string(ErrorCode code);

// Configuration errors map to CLI exit code 2, everything else to 3.
bool is_config_error(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace wga
