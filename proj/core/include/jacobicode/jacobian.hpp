// Copyright 2026 The jacobicode Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <unordered_map>
#include <vector>

#include "jacobicode/curve.hpp"
#include "jacobicode/poly.hpp"

namespace jacobicode {

/// Reduced divisor class (u, v): u monic with deg u <= 2, deg v < deg u and
/// u | v^2 + h v - f. The identity is (1, 0).
struct MumfordDivisor {
  Poly u{Field::one()};
  Poly v;

  bool is_identity() const noexcept { return u.degree() == 0; }

  friend bool operator==(const MumfordDivisor&, const MumfordDivisor&) = default;
  /// Shortlex on the wire encoding: u first, then v.
  friend std::strong_ordering operator<=>(const MumfordDivisor& x, const MumfordDivisor& y) {
    if (auto c = x.u <=> y.u; c != 0) return c;
    return x.v <=> y.v;
  }
};

/// Group law on J_C(F_q) for an imaginary model. Holds a copy of the curve.
class Jacobian {
 public:
  /// Throws RealModelUnsupported.
  explicit Jacobian(CurveModel curve);

  const CurveModel& curve() const noexcept { return curve_; }
  const Field& field() const noexcept { return *curve_.field; }

  static MumfordDivisor identity() { return {}; }
  bool is_valid(const MumfordDivisor& d) const;

  /// Cantor composition and reduction; inputs are not validated.
  MumfordDivisor add(const MumfordDivisor& a, const MumfordDivisor& b) const;
  MumfordDivisor neg(const MumfordDivisor& d) const;
  MumfordDivisor sub(const MumfordDivisor& a, const MumfordDivisor& b) const { return add(a, neg(b)); }
  /// Double-and-add; n may be negative.
  MumfordDivisor scalar_mul(std::int64_t n, const MumfordDivisor& d) const;

 private:
  MumfordDivisor reduce(Poly u, Poly v) const;

  CurveModel curve_;
  PolyRing ring_;
};

/// Validating front ends. Throw InvalidDivisor or RealModelUnsupported.
MumfordDivisor cantor_add(const CurveModel& curve, const MumfordDivisor& a, const MumfordDivisor& b);
MumfordDivisor mumford_neg(const CurveModel& curve, const MumfordDivisor& d);

/// Largest q for which enumerate_jacobian scans all (u, v) pairs.
inline constexpr std::uint32_t kJacobianEnumerationLimit = 64;

/// All of J_C(F_q) in shortlex order, with an index for membership queries.
class EnumeratedJacobian {
 public:
  EnumeratedJacobian(Jacobian group, std::vector<MumfordDivisor> elements);

  const Jacobian& group() const noexcept { return group_; }
  const std::vector<MumfordDivisor>& elements() const noexcept { return elements_; }
  std::size_t order() const noexcept { return elements_.size(); }
  /// Position in elements(); throws InvalidDivisor when absent.
  std::size_t index_of(const MumfordDivisor& d) const;
  /// Indices of the rational points of the theta divisor (deg u <= 1).
  const std::vector<std::size_t>& theta() const noexcept { return theta_; }

 private:
  static std::uint64_t key(const MumfordDivisor& d, std::uint32_t q);

  Jacobian group_;
  std::vector<MumfordDivisor> elements_;
  std::unordered_map<std::uint64_t, std::size_t> index_;
  std::vector<std::size_t> theta_;
};

struct EnumerateOptions {
  /// Compare the element count with f_A(1) computed from point counts.
  bool verify_order = true;
};

/// Direct scan of every (u, v) pair. Throws RealModelUnsupported,
/// BudgetExceeded (q > kJacobianEnumerationLimit), or OrderMismatch.
EnumeratedJacobian enumerate_jacobian(const CurveModel& curve, EnumerateOptions options = {});

/// Affine points and the point at infinity of an imaginary model over F_q.
struct RationalPoint {
  bool infinity = false;
  Elem x, y;
};

/// P -> [P - inf]: (x - x0, y0) for affine P, identity for inf. Throws
/// PointNotOnCurve or RealModelUnsupported.
MumfordDivisor embed_point(const CurveModel& curve, const RationalPoint& point);

/// Membership in the image of C (deg u <= 1).
bool theta_membership(const MumfordDivisor& d) noexcept;

using DivisorTuple = std::vector<MumfordDivisor>;

/// Tuples (P_1, ..., P_r) with zero sum, lexicographic in shortlex order of
/// the first r - 1 entries (P_r is determined). At most `limit` tuples.
std::vector<DivisorTuple> find_zero_sum_tuples(const EnumeratedJacobian& jac, unsigned r,
                                               std::size_t limit = std::numeric_limits<std::size_t>::max());

struct TranslateExperiment {
  DivisorTuple points;
  /// Rational points on the support of (C + P_1) + ... + (C + P_r).
  std::size_t support_count = 0;
  /// support_count == r * #C(F_q): no two translates share a rational point.
  bool attained = false;
  /// n - support_count, the weight of a codeword vanishing exactly there.
  std::int64_t weight_surrogate = 0;
};

/// Throws NonZeroSum unless the tuple sums to the identity.
TranslateExperiment translate_support_count(const EnumeratedJacobian& jac, const DivisorTuple& tuple);

}  // namespace jacobicode
