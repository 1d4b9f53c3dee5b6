// Copyright 2026 The jacobicode Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <boost/container/small_vector.hpp>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <tuple>
#include <vector>

#include "jacobicode/gf.hpp"

namespace jacobicode {

/// Dense univariate polynomial over some Field, low degree first, with no
/// trailing zeros. The zero polynomial has degree -1.
class Poly {
 public:
  using Storage = boost::container::small_vector<Elem, 8>;

  Poly() = default;
  Poly(std::initializer_list<Elem> coeffs) : c_(coeffs) { trim(); }
  explicit Poly(Storage coeffs) : c_(std::move(coeffs)) { trim(); }
  /// From integer encodings; no range check.
  static Poly from_encodings(std::span<const std::uint32_t> encodings);
  static Poly constant(Elem c) { return Poly{c}; }
  static Poly monomial(Elem c, int degree);

  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  /// Coefficient of x^i, zero beyond the degree.
  Elem operator[](int i) const noexcept {
    return i >= 0 && i < static_cast<int>(c_.size()) ? c_[static_cast<std::size_t>(i)] : Elem{};
  }
  Elem leading() const noexcept { return c_.empty() ? Elem{} : c_.back(); }
  const Storage& coeffs() const noexcept { return c_; }
  std::vector<std::uint32_t> encodings() const;

  void set(int i, Elem value);

  friend bool operator==(const Poly&, const Poly&) = default;
  /// Shortlex: degree first, then coefficients from x^0 upward.
  friend std::strong_ordering operator<=>(const Poly& x, const Poly& y);

 private:
  void trim() {
    while (!c_.empty() && c_.back().value == 0) c_.pop_back();
  }
  Storage c_;
};

/// Arithmetic in F[x] for a fixed field.
class PolyRing {
 public:
  explicit PolyRing(const Field& field) : f_(field) {}

  const Field& field() const noexcept { return f_; }

  Poly add(const Poly& x, const Poly& y) const;
  Poly sub(const Poly& x, const Poly& y) const;
  Poly neg(const Poly& x) const;
  Poly mul(const Poly& x, const Poly& y) const;
  Poly scale(const Poly& x, Elem c) const;

  /// Throws DivisionByZero for y = 0.
  std::pair<Poly, Poly> divmod(const Poly& x, const Poly& y) const;
  Poly div(const Poly& x, const Poly& y) const { return divmod(x, y).first; }
  Poly mod(const Poly& x, const Poly& y) const { return divmod(x, y).second; }
  bool divides(const Poly& d, const Poly& x) const { return mod(x, d).is_zero(); }

  Poly monic(const Poly& x) const;
  /// Monic gcd; gcd(0, 0) = 0.
  Poly gcd(Poly x, Poly y) const;

  struct Bezout {
    Poly d, s, t;  // d = s*x + t*y, d monic (or zero)
  };
  Bezout xgcd(const Poly& x, const Poly& y) const;

  Poly derivative(const Poly& x) const;
  Elem eval(const Poly& x, Elem at) const noexcept;

 private:
  const Field& f_;
};

}  // namespace jacobicode
