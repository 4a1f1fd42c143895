#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace nilc {

enum class ErrorKind {
  InvalidPart,
  EmptyMultiset,
  SumMismatch,
  InvalidShape,
  DimMismatch,
  InvalidGraph,
  InvalidPosition,
  GraftPrecondition,
  NoCompletionExists,
  InvariantViolation,
  UnknownInvariant,
  NotNilpotent,
  NotCoprime,
  ParseError,
};

std::string_view to_string(ErrorKind kind);

/// Base exception for every failure raised by the library. The kind is
/// stable and meant for programmatic dispatch; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace nilc
