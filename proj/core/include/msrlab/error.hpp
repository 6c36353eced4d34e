#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace msrlab {

enum class ErrorKind {
  NonPrimeP,
  ReduciblePolynomial,
  InvalidPolynomial,
  ZeroInverse,
  FieldMismatch,
  DimensionMismatch,
  AmbientMismatch,
  Infeasible,
  BlockSizeMismatch,
  Underdetermined,
  UnsupportedPuncture,
  ParseError,
  InvalidParams,
  DivisibilityError,
  MissingMatrix,
  NotOptimalAccess,
  ModeMismatch,
  ParamViolation,
  ConstructionFailed,
  LimitExceeded,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Every failure the library reports is an Error carrying a machine-checkable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NonPrimeP: return "NonPrimeP";
    case ErrorKind::ReduciblePolynomial: return "ReduciblePolynomial";
    case ErrorKind::InvalidPolynomial: return "InvalidPolynomial";
    case ErrorKind::ZeroInverse: return "ZeroInverse";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::AmbientMismatch: return "AmbientMismatch";
    case ErrorKind::Infeasible: return "Infeasible";
    case ErrorKind::BlockSizeMismatch: return "BlockSizeMismatch";
    case ErrorKind::Underdetermined: return "Underdetermined";
    case ErrorKind::UnsupportedPuncture: return "UnsupportedPuncture";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InvalidParams: return "InvalidParams";
    case ErrorKind::DivisibilityError: return "DivisibilityError";
    case ErrorKind::MissingMatrix: return "MissingMatrix";
    case ErrorKind::NotOptimalAccess: return "NotOptimalAccess";
    case ErrorKind::ModeMismatch: return "ModeMismatch";
    case ErrorKind::ParamViolation: return "ParamViolation";
    case ErrorKind::ConstructionFailed: return "ConstructionFailed";
    case ErrorKind::LimitExceeded: return "LimitExceeded";
  }
  return "Unknown";
}

}  // namespace msrlab
