#ifndef SQZ_ERROR_HPP
#define SQZ_ERROR_HPP

#include <stdexcept>
#include <string>

namespace sqz {

enum class ErrorCode {
  NonUnimodular,
  NonHyperbolic,
  SameAxis,
  CapExceeded,
  IndeterminateAtPrecisionCap,
  FieldMismatch,
  VanishingCorner,
  HullCheckFailed,
  DegenerateCrown,
  SupportNotCovered,
  CertificateMismatch,
  NotElementaryTensor,
  FamilyNotVerified,
  UnboundedSupport,
  BadInput,
};

inline const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::NonUnimodular: return "NonUnimodular";
    case ErrorCode::NonHyperbolic: return "NonHyperbolic";
    case ErrorCode::SameAxis: return "SameAxis";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::IndeterminateAtPrecisionCap: return "IndeterminateAtPrecisionCap";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::VanishingCorner: return "VanishingCorner";
    case ErrorCode::HullCheckFailed: return "HullCheckFailed";
    case ErrorCode::DegenerateCrown: return "DegenerateCrown";
    case ErrorCode::SupportNotCovered: return "SupportNotCovered";
    case ErrorCode::CertificateMismatch: return "CertificateMismatch";
    case ErrorCode::NotElementaryTensor: return "NotElementaryTensor";
    case ErrorCode::FamilyNotVerified: return "FamilyNotVerified";
    case ErrorCode::UnboundedSupport: return "UnboundedSupport";
    case ErrorCode::BadInput: return "BadInput";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace sqz

#endif
