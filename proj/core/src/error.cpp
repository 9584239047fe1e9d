#include "tnn/error.hpp"

namespace tnn {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::UnknownType: return "UnknownType";
    case ErrorCode::RankOutOfRange: return "RankOutOfRange";
    case ErrorCode::GroupTooLarge: return "GroupTooLarge";
    case ErrorCode::SystemMismatch: return "SystemMismatch";
    case ErrorCode::WordTooLong: return "WordTooLong";
    case ErrorCode::InvalidWord: return "InvalidWord";
    case ErrorCode::NotComparable: return "NotComparable";
    case ErrorCode::WordNotReduced: return "WordNotReduced";
    case ErrorCode::NotGraded: return "NotGraded";
    case ErrorCode::NotGradedBounded: return "NotGradedBounded";
    case ErrorCode::NotACover: return "NotACover";
    case ErrorCode::WordMismatch: return "WordMismatch";
    case ErrorCode::NotLongestElement: return "NotLongestElement";
    case ErrorCode::UnclassifiableCover: return "UnclassifiableCover";
    case ErrorCode::NotEL: return "NotEL";
    case ErrorCode::MatchingConflict: return "MatchingConflict";
    case ErrorCode::ZeroDimensional: return "ZeroDimensional";
    case ErrorCode::ComplexTooLarge: return "ComplexTooLarge";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace tnn
