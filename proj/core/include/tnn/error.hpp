#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tnn {

enum class ErrorCode {
  UnknownType,
  RankOutOfRange,
  GroupTooLarge,
  SystemMismatch,
  WordTooLong,
  InvalidWord,
  NotComparable,
  WordNotReduced,
  NotGraded,
  NotGradedBounded,
  NotACover,
  WordMismatch,
  NotLongestElement,
  UnclassifiableCover,
  NotEL,
  MatchingConflict,
  ZeroDimensional,
  ComplexTooLarge,
  InvalidArgument,
  ParseError,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Exception carrying a machine-readable code. All library failures are
/// reported through this type.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);

  [[nodiscard]] ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace tnn
