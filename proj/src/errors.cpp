#include "drazinkit/errors.hpp"

namespace drazinkit {

std::string_view to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::RingMismatch: return "RingMismatch";
    case ErrorCode::InvalidRing: return "InvalidRing";
    case ErrorCode::NotAField: return "NotAField";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::NoGroupInverse: return "NoGroupInverse";
    case ErrorCode::NoInverse: return "NoInverse";
    case ErrorCode::RelationViolation: return "RelationViolation";
    case ErrorCode::FormulaViolation: return "FormulaViolation";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::NoSolution: return "NoSolution";
    case ErrorCode::UnsupportedRing: return "UnsupportedRing";
    case ErrorCode::ZeroLambda: return "ZeroLambda";
    case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

} // namespace drazinkit
