#pragma once

#include <stdexcept>
#include <string>

namespace thmat {

enum class Errc {
  NotPrime,
  TooSmall,
  TooLarge,
  DivisionByZero,
  FieldMismatch,
  LengthMismatch,
  DuplicatePoint,
  BothZero,
  EmptySequence,
  CornerMismatch,
  BadLength,
  CompressionFailed,
  DimensionMismatch,
  BadBlockSize,
  ShapeMismatch,
  InsufficientLength,
  FieldTooSmall,
  SingularEverywhere,
  NotGeneric,
  GuardExceeded,
  BadPlan,
  InvalidArgument,
  Parse,
};

const char* errc_name(Errc code) noexcept;

// Every failure surfaced by the library is an Error carrying a stable code.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace thmat
