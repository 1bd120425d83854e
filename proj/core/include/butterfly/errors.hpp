#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace butterfly {

enum class ErrorCode {
  InvalidArgument,
  InvalidFraction,
  NotCoprime,
  NotFriendly,
  DegenerateDifference,
  TailDirectionMismatch,
  NoTail,
  InvariantViolation,
  InconsistentChernPair,
  NotCCell,
  ParabolicWord,
  EllipticWord,
  EmptyInput,
  ParseError,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// A chain letter was applied to a butterfly whose tail points the other way.
/// `prefix_length` counts the letters of the word that were applied
/// successfully before the failing one.
class TailDirectionMismatch : public Error {
 public:
  TailDirectionMismatch(std::size_t prefix_length, const std::string& what)
      : Error(ErrorCode::TailDirectionMismatch, what), prefix_length_(prefix_length) {}

  std::size_t prefix_length() const noexcept { return prefix_length_; }

 private:
  std::size_t prefix_length_;
};

}  // namespace butterfly
