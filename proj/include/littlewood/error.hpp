#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace littlewood {

enum class ErrorCode {
  CellOutsideDiagram,
  LengthExceedsBound,
  DivisionByNonUnit,
  NonconvergentAtOrder,
  InverseSubstitution,
  NotSymmetric,
  NonterminatingRemainder,
  OddDimension,
  NonemptyTwoCore,
  SingularDenominator,
  UnsupportedFamily,
  GramSingularAtQ0,
  NegativeExponentRemains,
  NoStabilization,
  BudgetExceeded,
  ParseError,
  TooManyVariables,
};

std::string_view to_string(ErrorCode code);

/// Every precondition failure in the library is reported through this type;
/// the code identifies the failure class, the message carries the details.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace littlewood
