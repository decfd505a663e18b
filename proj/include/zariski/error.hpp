#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace zariski {

enum class ErrorKind {
  Parse,
  InvalidConfiguration,
  DimensionMismatch,
  ConfigMismatch,
  NonSymmetric,
  DimensionTooLarge,
  Singular,
  NotNegativeDefinite,
  SupportViolation,
  NotEffective,
  NotPseudoEffective,
  InternalNegdefViolation,
  GenerationExhausted,
  InternalInvariant,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace zariski
