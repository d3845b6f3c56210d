#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace npnas {

enum class ErrorKind {
  kSortMismatch,
  kTypeMismatch,
  kUninhabited,
  kInvalidSignature,
  kUnknownConstructor,
  kUnboundVariable,
  kNonNameBinder,
  kNonNameFresh,
  kMissingVariable,
  kIllegalBinderSubstitution,
  kNarrowOnVariable,
  kInvalidSelection,
  kIllFormedProblem,
  kNotSolved,
  kUndeclaredSymbol,
  kPhaseTwoViolation,
  kPoolTooLarge,
  kSearchSpaceTooLarge,
  kSyntaxError,
  kValidationError,
  kInternal,
};

std::string_view to_string(ErrorKind kind);

// All library failures are reported through this exception; callers switch
// on kind() rather than on the message text.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace npnas
