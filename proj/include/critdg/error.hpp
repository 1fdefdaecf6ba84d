#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace critdg {

enum class ErrorCode {
  kLoopArc,
  kOutOfRange,
  kDuplicateArc,
  kArcPresent,
  kInfiniteInvariant,
  kUnsupportedInvariant,
  kInvalidSpec,
  kCyclicHertz,
  kSizeMismatch,
  kZeroSize,
  kDomainError,
  kTooLarge,
  kEmptyPredicate,
  kUnknownScenario,
  kParseError,
};

std::string_view error_code_name(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so that
/// callers (the CLI, the Python module) can map it without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace critdg
