#pragma once

#include <stdexcept>
#include <string>

namespace wzht {

enum class ErrorCode {
  ZeroDenominator,
  BadIndex,
  NotCompatible,
  UnsupportedResidue,
  UnrefinedFactor,
  StructureGap,
  ZeroRationalPart,
  PoleAt,
  PoleInRange,
  SyntaxError,
  ArityError,
  Unsupported,
  ZeroInput,
  Internal,
};

inline const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::ZeroDenominator: return "ZeroDenominator";
    case ErrorCode::BadIndex: return "BadIndex";
    case ErrorCode::NotCompatible: return "NotCompatible";
    case ErrorCode::UnsupportedResidue: return "UnsupportedResidue";
    case ErrorCode::UnrefinedFactor: return "UnrefinedFactor";
    case ErrorCode::StructureGap: return "StructureGap";
    case ErrorCode::ZeroRationalPart: return "ZeroRationalPart";
    case ErrorCode::PoleAt: return "PoleAt";
    case ErrorCode::PoleInRange: return "PoleInRange";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::ArityError: return "ArityError";
    case ErrorCode::Unsupported: return "Unsupported";
    case ErrorCode::ZeroInput: return "ZeroInput";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace wzht
