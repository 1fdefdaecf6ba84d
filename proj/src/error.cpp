#include "critdg/error.hpp"

namespace critdg {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kLoopArc: return "LoopArc";
    case ErrorCode::kOutOfRange: return "OutOfRange";
    case ErrorCode::kDuplicateArc: return "DuplicateArc";
    case ErrorCode::kArcPresent: return "ArcPresent";
    case ErrorCode::kInfiniteInvariant: return "InfiniteInvariant";
    case ErrorCode::kUnsupportedInvariant: return "UnsupportedInvariant";
    case ErrorCode::kInvalidSpec: return "InvalidSpec";
    case ErrorCode::kCyclicHertz: return "CyclicHertz";
    case ErrorCode::kSizeMismatch: return "SizeMismatch";
    case ErrorCode::kZeroSize: return "ZeroSize";
    case ErrorCode::kDomainError: return "DomainError";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kEmptyPredicate: return "EmptyPredicate";
    case ErrorCode::kUnknownScenario: return "UnknownScenario";
    case ErrorCode::kParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace critdg
