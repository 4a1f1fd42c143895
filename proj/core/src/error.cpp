#include "nilcomplete/error.hpp"

namespace nilc {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidPart: return "InvalidPart";
    case ErrorKind::EmptyMultiset: return "EmptyMultiset";
    case ErrorKind::SumMismatch: return "SumMismatch";
    case ErrorKind::InvalidShape: return "InvalidShape";
    case ErrorKind::DimMismatch: return "DimMismatch";
    case ErrorKind::InvalidGraph: return "InvalidGraph";
    case ErrorKind::InvalidPosition: return "InvalidPosition";
    case ErrorKind::GraftPrecondition: return "GraftPrecondition";
    case ErrorKind::NoCompletionExists: return "NoCompletionExists";
    case ErrorKind::InvariantViolation: return "InvariantViolation";
    case ErrorKind::UnknownInvariant: return "UnknownInvariant";
    case ErrorKind::NotNilpotent: return "NotNilpotent";
    case ErrorKind::NotCoprime: return "NotCoprime";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace nilc
