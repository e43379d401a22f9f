#include "divides/errors.hpp"

namespace divides {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptySequence: return "EmptySequence";
    case ErrorCode::NonPositiveEntry: return "NonPositiveEntry";
    case ErrorCode::MonotonicityViolation: return "MonotonicityViolation";
    case ErrorCode::MixedConcaveParity: return "MixedConcaveParity";
    case ErrorCode::NonGenericConcavePoint: return "NonGenericConcavePoint";
    case ErrorCode::TangentialIntersection: return "TangentialIntersection";
    case ErrorCode::TriplePoint: return "TriplePoint";
    case ErrorCode::InvalidParameter: return "InvalidParameter";
    case ErrorCode::FormulaViolation: return "FormulaViolation";
    case ErrorCode::PlacementFailure: return "PlacementFailure";
    case ErrorCode::NotAnArc: return "NotAnArc";
    case ErrorCode::UnsupportedGeometry: return "UnsupportedGeometry";
    case ErrorCode::NotAKnotClosure: return "NotAKnotClosure";
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::Overflow: return "Overflow";
  }
  return "Unknown";
}

}  // namespace divides
