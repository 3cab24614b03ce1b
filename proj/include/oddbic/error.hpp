#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace oddbic {

enum class ErrorCode {
  MalformedHeader,
  MalformedLine,
  VertexOutOfRange,
  SelfLoop,
  DuplicateEdge,
  InvalidCharacter,
  TruncatedPayload,
  TrailingPayload,
  OverlappingSets,
  OracleLimitExceeded,
  NoSmallTransversal,
  InvalidRecipeStep,
  StructureViolation,
  OutOfScopeClassification,
  BudgetTooSmall,
  WrongFamily,
  InvalidArgument,
};

std::string_view error_code_name(ErrorCode code);

// All recoverable failures of the library are reported through this type;
// `code()` is stable and is what callers and tests branch on.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace oddbic
