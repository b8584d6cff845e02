#include "ikdeg/error.hpp"

namespace ikdeg {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::InversionOfZero: return "InversionOfZero";
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::LogOfZero: return "LogOfZero";
    case Errc::ConductorMismatch: return "ConductorMismatch";
    case Errc::NonCoprimeIndex: return "NonCoprimeIndex";
    case Errc::CharAtZero: return "CharAtZero";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::ZeroParameter: return "ZeroParameter";
    case Errc::WrongConductor: return "WrongConductor";
    case Errc::NotInSubfield: return "NotInSubfield";
    case Errc::NonIntegerCoefficients: return "NonIntegerCoefficients";
    case Errc::PrecisionMismatch: return "PrecisionMismatch";
    case Errc::PrecisionTooLow: return "PrecisionTooLow";
    case Errc::PrecisionExhausted: return "PrecisionExhausted";
    case Errc::UnsupportedConductor: return "UnsupportedConductor";
    case Errc::DegenerateIndex: return "DegenerateIndex";
    case Errc::DegenerateParameters: return "DegenerateParameters";
    case Errc::InvalidParameters: return "InvalidParameters";
    case Errc::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace ikdeg
