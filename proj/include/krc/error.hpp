#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace krc {

enum class ErrorCode {
  NotIncreasing,
  LetterOutOfRange,
  AdmissibilityViolation,
  SplitImpossible,
  InvalidIndex,
  InvalidShape,
  ShapeTooLarge,
  ComponentCorrupt,
  NoMatchingComponent,
  TargetUnreachable,
  NotPartitionContent,
  HeightsNotSorted,
  OddArmSum,
  ChargeInvariant,
  NonDemazureArrow,
  BarredResidue,
  UnsupportedType,
  WeightMismatch,
  ParseError,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library. `code()` distinguishes user errors
/// (parse, shape, admissibility) from internal-consistency violations.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Parse failure with the byte offset into the input.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& what)
      : Error(ErrorCode::ParseError,
              what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace krc
