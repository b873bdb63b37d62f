#include "lfvo/error.hpp"

namespace lfvo {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::ZeroDenominator: return "ZeroDenominator";
    case ErrorCode::EmptyFeasibleSet: return "EmptyFeasibleSet";
    case ErrorCode::NonpositiveDenominator: return "NonpositiveDenominator";
    case ErrorCode::TooFewCriteria: return "TooFewCriteria";
    case ErrorCode::InfeasiblePoint: return "InfeasiblePoint";
    case ErrorCode::NoDecreasingCriterion: return "NoDecreasingCriterion";
    case ErrorCode::DirectionNotInCone: return "DirectionNotInCone";
    case ErrorCode::InvalidCertificate: return "InvalidCertificate";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UnknownExample: return "UnknownExample";
  }
  return "Unknown";
}

}  // namespace lfvo
