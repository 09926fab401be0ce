#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace perfect {

// Every failure raised by the library carries one of these codes. The CLI
// forwards the code string verbatim, so the spellings are part of the
// external interface.
enum class ErrorCode {
  ParseError,
  NegativeNatural,
  OutOfRange,
  DivisionByZero,
  ZeroToZeroPower,
  PrimalityOutOfRange,
  LucasLehmerExponent,
  FactorOfZero,
  TrialDivisionExhausted,
  SigmaAtZero,
  SieveLimit,
  StrategyMismatch,
  NotMersennePrime,
  OddInput,
  EvenInput,
  NotPerfect,
  NoOddExponent,
  MultipleOddExponents,
  StructureViolation,
  IdentityViolation,
  HornfeckViolation,
  CertificateFailure,
  CutoffsNotAscending,
  BoundViolation,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace perfect
