#include "npnas/error.hpp"

namespace npnas {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kSortMismatch: return "SortMismatch";
    case ErrorKind::kTypeMismatch: return "TypeMismatch";
    case ErrorKind::kUninhabited: return "Uninhabited";
    case ErrorKind::kInvalidSignature: return "InvalidSignature";
    case ErrorKind::kUnknownConstructor: return "UnknownConstructor";
    case ErrorKind::kUnboundVariable: return "UnboundVariable";
    case ErrorKind::kNonNameBinder: return "NonNameBinder";
    case ErrorKind::kNonNameFresh: return "NonNameFresh";
    case ErrorKind::kMissingVariable: return "MissingVariable";
    case ErrorKind::kIllegalBinderSubstitution: return "IllegalBinderSubstitution";
    case ErrorKind::kNarrowOnVariable: return "NarrowOnVariable";
    case ErrorKind::kInvalidSelection: return "InvalidSelection";
    case ErrorKind::kIllFormedProblem: return "IllFormedProblem";
    case ErrorKind::kNotSolved: return "NotSolved";
    case ErrorKind::kUndeclaredSymbol: return "UndeclaredSymbol";
    case ErrorKind::kPhaseTwoViolation: return "PhaseTwoViolation";
    case ErrorKind::kPoolTooLarge: return "PoolTooLarge";
    case ErrorKind::kSearchSpaceTooLarge: return "SearchSpaceTooLarge";
    case ErrorKind::kSyntaxError: return "SyntaxError";
    case ErrorKind::kValidationError: return "ValidationError";
    case ErrorKind::kInternal: return "Internal";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message),
      kind_(kind) {}

}  // namespace npnas
