#pragma once

#include <stdexcept>
#include <string>

namespace equicat {

enum class ErrorCode {
  NotAssociative,
  NoIdentity,
  NoInverse,
  DimMismatch,
  NotASubgroup,
  ExtentMismatch,
  DimCapExceeded,
  CoverageGap,
  CatalogIncomplete,
  NonTrivialActionOnTrivialRep,
  ValidationFailed,
  BadInput,
};

/// Validation failure. Checkers report failures through Report entries
/// instead; throwing is reserved for malformed inputs and broken
/// preconditions.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

inline const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::NotAssociative: return "NotAssociative";
    case ErrorCode::NoIdentity: return "NoIdentity";
    case ErrorCode::NoInverse: return "NoInverse";
    case ErrorCode::DimMismatch: return "DimMismatch";
    case ErrorCode::NotASubgroup: return "NotASubgroup";
    case ErrorCode::ExtentMismatch: return "ExtentMismatch";
    case ErrorCode::DimCapExceeded: return "DimCapExceeded";
    case ErrorCode::CoverageGap: return "CoverageGap";
    case ErrorCode::CatalogIncomplete: return "CatalogIncomplete";
    case ErrorCode::NonTrivialActionOnTrivialRep:
      return "NonTrivialActionOnTrivialRep";
    case ErrorCode::ValidationFailed: return "ValidationFailed";
    case ErrorCode::BadInput: return "BadInput";
  }
  return "Unknown";
}

}  // namespace equicat
