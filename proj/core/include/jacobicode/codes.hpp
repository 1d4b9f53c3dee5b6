// Copyright 2026 The jacobicode Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "jacobicode/zeta.hpp"

namespace jacobicode {

/// Self-intersection 2*genus - 2 of a curve of the given arithmetic genus on
/// an abelian surface. Throws BadComponent for negative genus.
std::int64_t adjunction_self_intersection(std::int64_t arithmetic_genus);

/// Upper bound q + 1 + tau + |genus - 2| * [2 sqrt q] on the rational points
/// of an irreducible curve of the given arithmetic genus lying on an abelian
/// surface of trace -tau. Needs tau >= -q (TraceHypothesisViolated) and
/// genus >= 1 (BadComponent).
std::int64_t weil_type_point_bound(std::uint64_t q, std::int64_t tau, std::int64_t arithmetic_genus);

struct Component {
  std::int64_t multiplicity = 1;
  std::int64_t genus = 2;  // arithmetic genus of the orbit sum
};

struct Decomposition {
  std::vector<Component> components;
};

/// Exact test of sum(n_i * sqrt(genus_i - 1)) <= r. Radicals are grouped by
/// squarefree part; when an irrational part remains the sum cannot equal r
/// and rational bounds are refined until they separate. Throws BadComponent
/// for genus < 2 or multiplicity < 1.
bool genus_budget_check(const Decomposition& d, std::int64_t r);

/// max{N1 + (r^2 - 1) m, r N1} with m = [2 sqrt q].
std::int64_t support_bound_closed_form(std::uint64_t q, std::int64_t n1, std::int64_t r);

/// Maximizes k (N1 - 2m) + m * sum(genus_i) over every decomposition with
/// 1 <= k <= r components of genus >= 2 that passes genus_budget_check.
/// Throws BudgetExceeded for r > 6, InvalidR for r < 1.
std::int64_t support_bound_bruteforce(std::uint64_t q, std::int64_t n1, std::int64_t r);

enum class Branch { Phi1, PhiR };
std::string to_string(Branch b);

struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;
  double value() const noexcept { return static_cast<double>(num) / static_cast<double>(den); }
  friend bool operator==(const Rational&, const Rational&) = default;
};

struct CodeReport {
  std::uint64_t q = 0;
  std::int64_t r = 0;
  std::int64_t n1 = 0;
  std::int64_t n = 0;     // length, #J_C(F_q)
  std::int64_t k = 0;     // dimension r^2
  std::int64_t d_lb = 0;  // minimum-distance lower bound, may be <= 0
  Branch branch = Branch::Phi1;
  Rational threshold_r;   // N1/m - 1
  SimplicityVerdict simplicity;
  bool certified = false;
  std::vector<std::string> warnings;
};

struct CodeParamsOptions {
  /// Permit r in {1, 2}, where rC need not be very ample.
  bool allow_small_r = false;
};

/// Code parameters for G numerically equivalent to rC on J_C.
/// certified = (simplicity is Simple) and d_lb > 0. Throws InvalidR or
/// InconsistentCounts (n1 != q + 1 + c1).
CodeReport code_params(const WeilData& w, std::int64_t n1, std::int64_t r, CodeParamsOptions options = {});

}  // namespace jacobicode
