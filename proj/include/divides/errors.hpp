#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace divides {

enum class ErrorCode {
  EmptySequence,
  NonPositiveEntry,
  MonotonicityViolation,
  MixedConcaveParity,
  NonGenericConcavePoint,
  TangentialIntersection,
  TriplePoint,
  InvalidParameter,
  FormulaViolation,
  PlacementFailure,
  NotAnArc,
  UnsupportedGeometry,
  NotAKnotClosure,
  NotCoprime,
  ParseError,
  Overflow,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library carries one of the codes above.
// `index` is only meaningful for MonotonicityViolation (1-based entry index).
class DivideError : public std::runtime_error {
 public:
  DivideError(ErrorCode code, const std::string& what, int index = 0)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code),
        index_(index) {}

  ErrorCode code() const noexcept { return code_; }
  int index() const noexcept { return index_; }

 private:
  ErrorCode code_;
  int index_;
};

}  // namespace divides
