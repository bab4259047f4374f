#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fglforge {

enum class ErrorCode {
  RingMismatch,
  Unsupported,
  Undecidable,
  NotRepresentable,
  NotInvertible,
  InvalidArgument,
  NonzeroConstantTerm,
  NonUnitLinearCoefficient,
  InsufficientPrecision,
  IncompatibleRing,
  NotValidated,
  NotQAlgebra,
  BadLogShape,
  BadCoordinate,
  AlgebroidMismatch,
  NotACoaction,
  IntegralityViolation,
  Inconsistent,
  NonInvertibleK,
  WindowMiss,
  ModelMismatch,
  InsufficientDepth,
  SyntaxError,
  UnknownVariable,
  NonIntegerExponent,
  Io,
};

std::string_view to_string(ErrorCode code) noexcept;

/// All library failures are reported through this one exception type; the
/// code identifies the contract clause that was violated.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::RingMismatch: return "RingMismatch";
    case ErrorCode::Unsupported: return "Unsupported";
    case ErrorCode::Undecidable: return "Undecidable";
    case ErrorCode::NotRepresentable: return "NotRepresentable";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NonzeroConstantTerm: return "NonzeroConstantTerm";
    case ErrorCode::NonUnitLinearCoefficient: return "NonUnitLinearCoefficient";
    case ErrorCode::InsufficientPrecision: return "InsufficientPrecision";
    case ErrorCode::IncompatibleRing: return "IncompatibleRing";
    case ErrorCode::NotValidated: return "NotValidated";
    case ErrorCode::NotQAlgebra: return "NotQAlgebra";
    case ErrorCode::BadLogShape: return "BadLogShape";
    case ErrorCode::BadCoordinate: return "BadCoordinate";
    case ErrorCode::AlgebroidMismatch: return "AlgebroidMismatch";
    case ErrorCode::NotACoaction: return "NotACoaction";
    case ErrorCode::IntegralityViolation: return "IntegralityViolation";
    case ErrorCode::Inconsistent: return "Inconsistent";
    case ErrorCode::NonInvertibleK: return "NonInvertibleK";
    case ErrorCode::WindowMiss: return "WindowMiss";
    case ErrorCode::ModelMismatch: return "ModelMismatch";
    case ErrorCode::InsufficientDepth: return "InsufficientDepth";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnknownVariable: return "UnknownVariable";
    case ErrorCode::NonIntegerExponent: return "NonIntegerExponent";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

}  // namespace fglforge
