#include "whopf/error.hpp"

namespace whopf {

const char* error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::NotEnumerable: return "NotEnumerable";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::Inconsistent: return "Inconsistent";
    case ErrorCode::NotIdempotent: return "NotIdempotent";
    case ErrorCode::NoFactorization: return "NoFactorization";
    case ErrorCode::InvalidGroupoid: return "InvalidGroupoid";
    case ErrorCode::NotCocommutative: return "NotCocommutative";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::NoInverse: return "NoInverse";
    case ErrorCode::FactorizationFailure: return "FactorizationFailure";
    case ErrorCode::NotComparable: return "NotComparable";
    case ErrorCode::NotTotal: return "NotTotal";
    case ErrorCode::NotCleft: return "NotCleft";
    case ErrorCode::InvalidStructure: return "InvalidStructure";
    case ErrorCode::SearchSpaceTooLarge: return "SearchSpaceTooLarge";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::TwistedFail: return "TwistedFail";
    case ErrorCode::CocycleFail: return "CocycleFail";
    case ErrorCode::NormalFail: return "NormalFail";
  }
  return "Error";
}

}  // namespace whopf
