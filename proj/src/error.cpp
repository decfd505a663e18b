#include "zariski/error.hpp"

namespace zariski {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::InvalidConfiguration: return "InvalidConfiguration";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::ConfigMismatch: return "ConfigMismatch";
    case ErrorKind::NonSymmetric: return "NonSymmetric";
    case ErrorKind::DimensionTooLarge: return "DimensionTooLarge";
    case ErrorKind::Singular: return "Singular";
    case ErrorKind::NotNegativeDefinite: return "NotNegativeDefinite";
    case ErrorKind::SupportViolation: return "SupportViolation";
    case ErrorKind::NotEffective: return "NotEffective";
    case ErrorKind::NotPseudoEffective: return "NotPseudoEffective";
    case ErrorKind::InternalNegdefViolation: return "InternalNegdefViolation";
    case ErrorKind::GenerationExhausted: return "GenerationExhausted";
    case ErrorKind::InternalInvariant: return "InternalInvariant";
  }
  return "Unknown";
}

}  // namespace zariski
