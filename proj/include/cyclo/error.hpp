#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cyclo {

enum class ErrorCode {
  NotPrime,
  BadModulus,
  CharacteristicUnsupported,
  DivisionByZero,
  ContextMismatch,
  ZeroInput,
  NonResidue,
  CharacteristicFive,
  CharacteristicDividesN,
  NonMonic,
  ZeroDegree,
  NotIrreducible,
  ZeroConstantTerm,
  ZeroPolynomial,
  EvenR,
  CharacteristicDividesR,
  WitnessUnsolvable,
  FamilyResidueMismatch,
  FamilyUnavailable,
  NBelowValidity,
  Unsupported,
};

std::string_view to_string(ErrorCode code) noexcept;

// Every library failure is reported through this exception; `code()` lets
// callers branch without parsing the message.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace cyclo
