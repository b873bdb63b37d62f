#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lfvo {

enum class ErrorCode {
  DimensionMismatch,
  ZeroDenominator,
  EmptyFeasibleSet,
  NonpositiveDenominator,
  TooFewCriteria,
  InfeasiblePoint,
  NoDecreasingCriterion,
  DirectionNotInCone,
  InvalidCertificate,
  ParseError,
  UnknownExample,
};

std::string_view to_string(ErrorCode code);

/// Single exception type for every recoverable failure; `code()` tells the
/// caller which contract was broken.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  [[nodiscard]] ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace lfvo
