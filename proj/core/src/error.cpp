// Copyright 2026 The jacobicode Authors
// SPDX-License-Identifier: Apache-2.0

#include "jacobicode/error.hpp"

namespace jacobicode {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::ReducibleModulus: return "ReducibleModulus";
    case ErrorCode::FieldTooLarge: return "FieldTooLarge";
    case ErrorCode::SpecMismatch: return "SpecMismatch";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::WrongDegree: return "WrongDegree";
    case ErrorCode::SingularModel: return "SingularModel";
    case ErrorCode::GenusNotTwo: return "GenusNotTwo";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::InconsistentCounts: return "InconsistentCounts";
    case ErrorCode::InvalidDivisor: return "InvalidDivisor";
    case ErrorCode::RealModelUnsupported: return "RealModelUnsupported";
    case ErrorCode::OrderMismatch: return "OrderMismatch";
    case ErrorCode::PointNotOnCurve: return "PointNotOnCurve";
    case ErrorCode::NonZeroSum: return "NonZeroSum";
    case ErrorCode::TraceHypothesisViolated: return "TraceHypothesisViolated";
    case ErrorCode::BadComponent: return "BadComponent";
    case ErrorCode::InvalidR: return "InvalidR";
    case ErrorCode::SpaceTooLarge: return "SpaceTooLarge";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::Usage: return "Usage";
    case ErrorCode::InternalTripwire: return "InternalTripwire";
  }
  return "Unknown";
}

bool is_tripwire(ErrorCode code) noexcept {
  return code == ErrorCode::OrderMismatch || code == ErrorCode::InternalTripwire;
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

}  // namespace jacobicode
