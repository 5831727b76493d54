#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace trisect {

enum class ErrorCode {
  ZeroDenominator,
  NonSquarefreeRadicand,
  DivisionByZero,
  RadicandMismatch,
  DegenerateBasis,
  NotPrime,
  NotOddPrime,
  NotCoprime,
  CapExceeded,
  GcdBoundViolated,
  OutOfRange,
  BadParameters,
  Parse,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so
/// callers (notably the CLI) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message);

}  // namespace trisect
