// Copyright 2026 The jacobicode Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

namespace jacobicode {

/// Fields up to this order are built without an explicit override.
inline constexpr std::uint64_t kDefaultFieldLimit = std::uint64_t{1} << 16;
/// Absolute ceiling; the log/exp tables grow linearly with q.
inline constexpr std::uint64_t kHardFieldLimit = std::uint64_t{1} << 20;

/// An element of some Field in its canonical integer encoding
/// sum(coeffs[i] * p^i). Carries no reference to its field; see FieldElement
/// for the checked wrapper.
struct Elem {
  std::uint32_t value = 0;

  friend constexpr bool operator==(Elem, Elem) = default;
  friend constexpr auto operator<=>(Elem, Elem) = default;
};

class Field;
using FieldPtr = std::shared_ptr<const Field>;

struct FieldOptions {
  /// Permit kDefaultFieldLimit < q <= kHardFieldLimit.
  bool allow_large = false;
};

/// F_{p^a} = F_p[w]/(modulus). Immutable after construction; every member
/// function is const and thread-safe.
///
/// Multiplication goes through discrete log/exp tables with respect to a
/// primitive element, so all operations are O(1) except addition in odd
/// characteristic with a > 1, which is digit-wise in base p.
class Field {
 public:
  std::uint32_t p() const noexcept { return p_; }
  unsigned a() const noexcept { return a_; }
  std::uint32_t q() const noexcept { return q_; }
  /// Monic, degree a, coefficients low degree first.
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

  bool same_as(const Field& other) const noexcept {
    return p_ == other.p_ && a_ == other.a_ && modulus_ == other.modulus_;
  }

  static constexpr Elem zero() noexcept { return Elem{0}; }
  static constexpr Elem one() noexcept { return Elem{1}; }

  /// Image of an integer in the prime subfield.
  Elem from_int(std::int64_t v) const noexcept;
  /// Throws ParseError when the encoding is >= q.
  Elem from_encoding(std::uint64_t encoding) const;
  /// Throws ParseError unless coeffs.size() == a and every coeff < p.
  Elem from_coeffs(std::span<const std::uint32_t> coeffs) const;
  std::vector<std::uint32_t> coeffs(Elem x) const;

  Elem add(Elem x, Elem y) const noexcept;
  Elem sub(Elem x, Elem y) const noexcept;
  Elem neg(Elem x) const noexcept;
  Elem mul(Elem x, Elem y) const noexcept {
    if (x.value == 0 || y.value == 0) return zero();
    return Elem{exp_[log_[x.value] + log_[y.value]]};
  }
  Elem sqr(Elem x) const noexcept { return mul(x, x); }
  /// Throws DivisionByZero.
  Elem inv(Elem x) const;
  Elem div(Elem x, Elem y) const { return mul(x, inv(y)); }
  Elem pow(Elem x, std::uint64_t e) const noexcept;

  /// The primitive element the log tables are built on.
  Elem generator() const noexcept { return Elem{exp_[1 % (q_ - 1)]}; }
  /// Discrete log base generator(); x must be nonzero.
  std::uint32_t log(Elem x) const noexcept { return log_[x.value]; }
  Elem exp(std::uint64_t e) const noexcept { return Elem{exp_[e % (q_ - 1)]}; }

  bool is_square(Elem x) const noexcept;
  std::optional<Elem> sqrt(Elem x) const noexcept;

  /// Absolute trace to F_p, returned as a residue in [0, p).
  std::uint32_t absolute_trace(Elem x) const noexcept;

  /// Characteristic 2 only: a root of z^2 + z = c if one exists.
  std::optional<Elem> solve_artin_schreier(Elem c) const;

  Field(std::uint32_t p, unsigned a, std::vector<std::uint32_t> modulus);

 private:
  void build_tables();
  void build_trace();

  std::uint32_t p_;
  unsigned a_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> exp_;  // length 2(q-1) so log sums need no reduction
  std::vector<std::uint32_t> log_;
  std::vector<std::uint32_t> add_table_;  // q*q, only for small odd extension fields
  std::vector<std::uint32_t> basis_trace_;
  // Echelon form of z -> z^2 + z over F_2: (image vector, preimage mask).
  std::vector<std::pair<std::uint32_t, std::uint32_t>> as_basis_;
};

/// Builds F_{p^a}. With no modulus the default (smallest primitive
/// polynomial by coefficient encoding) is used and the result is shared from
/// a process-wide cache.
FieldPtr make_field(std::uint32_t p, unsigned a,
                    std::optional<std::vector<std::uint32_t>> modulus = std::nullopt,
                    FieldOptions options = {});

/// The field of order q with its default modulus. q must be a prime power.
FieldPtr field_of_order(std::uint64_t q, FieldOptions options = {});

/// Smallest monic primitive polynomial of degree a over F_p, ordered by the
/// integer encoding of its non-leading coefficients. For a = 1 this is w.
std::vector<std::uint32_t> default_modulus(std::uint32_t p, unsigned a);

bool is_prime(std::uint64_t n) noexcept;
/// Trial factor search over all monic polynomials of degree <= deg/2.
bool is_irreducible_mod_p(std::span<const std::uint32_t> poly, std::uint32_t p);

/// F_q embedded in F_{q^k}. The large field uses its own default modulus;
/// `image[x.value]` is the image of x.
struct FieldExtension {
  FieldPtr base;
  FieldPtr ext;
  unsigned degree = 1;
  std::vector<Elem> image;

  Elem embed(Elem x) const noexcept { return image[x.value]; }
};
using ExtensionPtr = std::shared_ptr<const FieldExtension>;

/// Cached per (base field, k). Throws FieldTooLarge when q^k > kHardFieldLimit.
ExtensionPtr extend_field(const FieldPtr& base, unsigned k);

/// F_q -> F_{q^2}. Throws FieldTooLarge when q^2 > kHardFieldLimit.
inline ExtensionPtr lift_quadratic(const FieldPtr& base) { return extend_field(base, 2); }

/// Value-semantic element bound to its field. Mixed-field arithmetic throws
/// SpecMismatch.
class FieldElement {
 public:
  FieldElement(FieldPtr field, Elem value);
  static FieldElement from_encoding(FieldPtr field, std::uint64_t encoding);

  const FieldPtr& field() const noexcept { return field_; }
  Elem elem() const noexcept { return value_; }
  std::uint64_t encoding() const noexcept { return value_.value; }
  std::vector<std::uint32_t> coeffs() const { return field_->coeffs(value_); }
  bool is_zero() const noexcept { return value_.value == 0; }

  FieldElement inverse() const;

  friend FieldElement operator+(const FieldElement& x, const FieldElement& y);
  friend FieldElement operator-(const FieldElement& x, const FieldElement& y);
  friend FieldElement operator*(const FieldElement& x, const FieldElement& y);
  friend FieldElement operator/(const FieldElement& x, const FieldElement& y);
  FieldElement operator-() const;

  friend bool operator==(const FieldElement& x, const FieldElement& y);

 private:
  FieldPtr field_;
  Elem value_;
};

}  // namespace jacobicode
