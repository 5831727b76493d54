#include "trisect/error.hpp"

namespace trisect {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ZeroDenominator: return "ZeroDenominator";
    case ErrorCode::NonSquarefreeRadicand: return "NonSquarefreeRadicand";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::RadicandMismatch: return "RadicandMismatch";
    case ErrorCode::DegenerateBasis: return "DegenerateBasis";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::NotOddPrime: return "NotOddPrime";
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::GcdBoundViolated: return "GcdBoundViolated";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::BadParameters: return "BadParameters";
    case ErrorCode::Parse: return "Parse";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

void fail(ErrorCode code, const std::string& message) { throw Error(code, message); }

}  // namespace trisect
