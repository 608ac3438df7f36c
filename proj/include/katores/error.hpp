#pragma once

#include <stdexcept>
#include <string>

namespace katores {

enum class ErrorCode {
  MixedRings,
  NonUnitDivisor,
  NotCoprime,
  BadReduction,
  NotAUnit,
  WindowUnderflow,
  BadParameter,
  NonzeroPrefactor,
  AllCoeffsNonUnit,
  PrecisionExhausted,
  NotIncident,
  InvalidRing,
  Parse,
};

const char* to_string(ErrorCode code);

/// Every precondition violation in the library surfaces as this exception.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::MixedRings: return "MixedRings";
    case ErrorCode::NonUnitDivisor: return "NonUnitDivisor";
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::BadReduction: return "BadReduction";
    case ErrorCode::NotAUnit: return "NotAUnit";
    case ErrorCode::WindowUnderflow: return "WindowUnderflow";
    case ErrorCode::BadParameter: return "BadParameter";
    case ErrorCode::NonzeroPrefactor: return "NonzeroPrefactor";
    case ErrorCode::AllCoeffsNonUnit: return "AllCoeffsNonUnit";
    case ErrorCode::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorCode::NotIncident: return "NotIncident";
    case ErrorCode::InvalidRing: return "InvalidRing";
    case ErrorCode::Parse: return "Parse";
  }
  return "Unknown";
}

}  // namespace katores
