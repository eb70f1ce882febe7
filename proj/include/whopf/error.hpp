#pragma once

#include <stdexcept>
#include <string>

namespace whopf {

enum class ErrorCode {
  DivisionByZero,
  FieldMismatch,
  NotEnumerable,
  ShapeMismatch,
  Inconsistent,
  NotIdempotent,
  NoFactorization,
  InvalidGroupoid,
  NotCocommutative,
  NotInvertible,
  NoInverse,
  FactorizationFailure,
  NotComparable,
  NotTotal,
  NotCleft,
  InvalidStructure,
  SearchSpaceTooLarge,
  ParseError,
  TwistedFail,
  CocycleFail,
  NormalFail,
};

const char* error_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace whopf
