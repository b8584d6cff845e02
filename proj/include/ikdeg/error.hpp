#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ikdeg {

enum class Errc {
  InversionOfZero,
  FieldMismatch,
  LogOfZero,
  ConductorMismatch,
  NonCoprimeIndex,
  CharAtZero,
  BudgetExceeded,
  ZeroParameter,
  WrongConductor,
  NotInSubfield,
  NonIntegerCoefficients,
  PrecisionMismatch,
  PrecisionTooLow,
  PrecisionExhausted,
  UnsupportedConductor,
  DegenerateIndex,
  DegenerateParameters,
  InvalidParameters,
  IoError,
};

std::string_view errc_name(Errc code) noexcept;

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI in particular) can map them onto exit codes.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace ikdeg
