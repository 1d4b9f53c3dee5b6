// Copyright 2026 The jacobicode Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace jacobicode {

enum class ErrorCode {
  // gf
  NotPrime,
  ReducibleModulus,
  FieldTooLarge,
  SpecMismatch,
  DivisionByZero,
  // curve
  WrongDegree,
  SingularModel,
  GenusNotTwo,
  BudgetExceeded,
  // zeta
  InconsistentCounts,
  // jacobian
  InvalidDivisor,
  RealModelUnsupported,
  OrderMismatch,
  PointNotOnCurve,
  NonZeroSum,
  // codes
  TraceHypothesisViolated,
  BadComponent,
  InvalidR,
  // explorer
  SpaceTooLarge,
  ParseError,
  Usage,
  // a computed cross-check disagreed with itself
  InternalTripwire,
};

std::string_view to_string(ErrorCode code) noexcept;

// Tripwires mean an implementation bug rather than bad input; the CLI maps
// them to exit code 2.
bool is_tripwire(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace jacobicode
