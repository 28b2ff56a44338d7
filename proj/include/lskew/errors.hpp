#pragma once

#include <stdexcept>
#include <string>

namespace lskew {

enum class ErrorKind {
  ZeroField,
  NullField,
  NotNull,
  ZeroVelocity,
  SuperluminalVelocity,
  InvalidTensor,
  SingularPoint,
  NullLocusCrossing,
  RefinementExhausted,
  AmbiguousContinuation,
  BadArgument,
  NotFound,
  Parse,
};

constexpr const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::ZeroField: return "ZeroField";
    case ErrorKind::NullField: return "NullField";
    case ErrorKind::NotNull: return "NotNull";
    case ErrorKind::ZeroVelocity: return "ZeroVelocity";
    case ErrorKind::SuperluminalVelocity: return "SuperluminalVelocity";
    case ErrorKind::InvalidTensor: return "InvalidTensor";
    case ErrorKind::SingularPoint: return "SingularPoint";
    case ErrorKind::NullLocusCrossing: return "NullLocusCrossing";
    case ErrorKind::RefinementExhausted: return "RefinementExhausted";
    case ErrorKind::AmbiguousContinuation: return "AmbiguousContinuation";
    case ErrorKind::BadArgument: return "BadArgument";
    case ErrorKind::NotFound: return "NotFound";
    case ErrorKind::Parse: return "Parse";
  }
  return "Error";
}

/// Library-wide error type. The kind is stable and machine-readable; the CLI
/// maps it onto structured JSON error objects.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace lskew
