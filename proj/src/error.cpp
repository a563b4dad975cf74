#include "littlewood/error.hpp"

namespace littlewood {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::CellOutsideDiagram: return "cell-outside-diagram";
    case ErrorCode::LengthExceedsBound: return "length-exceeds-bound";
    case ErrorCode::DivisionByNonUnit: return "division-by-non-unit";
    case ErrorCode::NonconvergentAtOrder: return "nonconvergent-at-order-D";
    case ErrorCode::InverseSubstitution: return "inverse-substitution-on-non-Laurent-target";
    case ErrorCode::NotSymmetric: return "not-symmetric";
    case ErrorCode::NonterminatingRemainder: return "nonterminating-remainder";
    case ErrorCode::OddDimension: return "odd-dimension";
    case ErrorCode::NonemptyTwoCore: return "nonempty-2-core";
    case ErrorCode::SingularDenominator: return "singular-denominator";
    case ErrorCode::UnsupportedFamily: return "unsupported-family";
    case ErrorCode::GramSingularAtQ0: return "gram-singular-at-q0";
    case ErrorCode::NegativeExponentRemains: return "negative-exponent-remains";
    case ErrorCode::NoStabilization: return "no-stabilization-within-budget";
    case ErrorCode::BudgetExceeded: return "budget-exceeded";
    case ErrorCode::ParseError: return "parse-error";
    case ErrorCode::TooManyVariables: return "too-many-variables";
  }
  return "unknown";
}

}  // namespace littlewood
