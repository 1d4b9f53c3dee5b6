// Copyright 2026 The jacobicode Authors
// SPDX-License-Identifier: Apache-2.0

#include "jacobicode/poly.hpp"

#include <algorithm>

#include "jacobicode/error.hpp"

namespace jacobicode {

Poly Poly::from_encodings(std::span<const std::uint32_t> encodings) {
  Storage s;
  s.reserve(encodings.size());
  for (auto e : encodings) s.push_back(Elem{e});
  return Poly(std::move(s));
}

Poly Poly::monomial(Elem c, int degree) {
  Storage s(static_cast<std::size_t>(degree) + 1, Elem{});
  s.back() = c;
  return Poly(std::move(s));
}

std::vector<std::uint32_t> Poly::encodings() const {
  std::vector<std::uint32_t> out;
  out.reserve(c_.size());
  for (auto e : c_) out.push_back(e.value);
  return out;
}

void Poly::set(int i, Elem value) {
  const auto idx = static_cast<std::size_t>(i);
  if (idx >= c_.size()) {
    if (value.value == 0) return;
    c_.resize(idx + 1, Elem{});
  }
  c_[idx] = value;
  trim();
}

std::strong_ordering operator<=>(const Poly& x, const Poly& y) {
  if (auto c = x.degree() <=> y.degree(); c != 0) return c;
  return std::lexicographical_compare_three_way(x.c_.begin(), x.c_.end(), y.c_.begin(), y.c_.end());
}

Poly PolyRing::add(const Poly& x, const Poly& y) const {
  const auto& a = x.coeffs();
  const auto& b = y.coeffs();
  Poly::Storage s(std::max(a.size(), b.size()), Elem{});
  for (std::size_t i = 0; i < s.size(); ++i) {
    const Elem u = i < a.size() ? a[i] : Elem{};
    const Elem v = i < b.size() ? b[i] : Elem{};
    s[i] = f_.add(u, v);
  }
  return Poly(std::move(s));
}

Poly PolyRing::sub(const Poly& x, const Poly& y) const {
  const auto& a = x.coeffs();
  const auto& b = y.coeffs();
  Poly::Storage s(std::max(a.size(), b.size()), Elem{});
  for (std::size_t i = 0; i < s.size(); ++i) {
    const Elem u = i < a.size() ? a[i] : Elem{};
    const Elem v = i < b.size() ? b[i] : Elem{};
    s[i] = f_.sub(u, v);
  }
  return Poly(std::move(s));
}

Poly PolyRing::neg(const Poly& x) const {
  Poly::Storage s(x.coeffs());
  for (auto& c : s) c = f_.neg(c);
  return Poly(std::move(s));
}

Poly PolyRing::mul(const Poly& x, const Poly& y) const {
  if (x.is_zero() || y.is_zero()) return {};
  const auto& a = x.coeffs();
  const auto& b = y.coeffs();
  Poly::Storage s(a.size() + b.size() - 1, Elem{});
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].value == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) s[i + j] = f_.add(s[i + j], f_.mul(a[i], b[j]));
  }
  return Poly(std::move(s));
}

Poly PolyRing::scale(const Poly& x, Elem c) const {
  if (c.value == 0) return {};
  Poly::Storage s(x.coeffs());
  for (auto& e : s) e = f_.mul(e, c);
  return Poly(std::move(s));
}

std::pair<Poly, Poly> PolyRing::divmod(const Poly& x, const Poly& y) const {
  if (y.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  if (x.degree() < y.degree()) return {Poly{}, x};
  const int dy = y.degree();
  const Elem lead_inv = f_.inv(y.leading());
  Poly::Storage r(x.coeffs());
  Poly::Storage q(static_cast<std::size_t>(x.degree() - dy) + 1, Elem{});
  const auto& b = y.coeffs();
  for (int i = x.degree(); i >= dy; --i) {
    const Elem c = r[static_cast<std::size_t>(i)];
    if (c.value == 0) continue;
    const Elem factor = f_.mul(c, lead_inv);
    q[static_cast<std::size_t>(i - dy)] = factor;
    for (int j = 0; j <= dy; ++j) {
      auto& t = r[static_cast<std::size_t>(i - dy + j)];
      t = f_.sub(t, f_.mul(factor, b[static_cast<std::size_t>(j)]));
    }
  }
  r.resize(static_cast<std::size_t>(dy));
  return {Poly(std::move(q)), Poly(std::move(r))};
}

Poly PolyRing::monic(const Poly& x) const {
  if (x.is_zero() || x.leading() == Field::one()) return x;
  return scale(x, f_.inv(x.leading()));
}

Poly PolyRing::gcd(Poly x, Poly y) const {
  while (!y.is_zero()) {
    Poly r = mod(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  return monic(x);
}

PolyRing::Bezout PolyRing::xgcd(const Poly& x, const Poly& y) const {
  Poly r0 = x, r1 = y;
  Poly s0{Field::one()}, s1;
  Poly t0, t1{Field::one()};
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly s2 = sub(s0, mul(q, s1));
    s0 = std::move(s1);
    s1 = std::move(s2);
    Poly t2 = sub(t0, mul(q, t1));
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  const Elem li = f_.inv(r0.leading());
  return {scale(r0, li), scale(s0, li), scale(t0, li)};
}

Poly PolyRing::derivative(const Poly& x) const {
  if (x.degree() < 1) return {};
  Poly::Storage s(static_cast<std::size_t>(x.degree()), Elem{});
  for (int i = 1; i <= x.degree(); ++i) {
    s[static_cast<std::size_t>(i - 1)] = f_.mul(f_.from_int(i), x[i]);
  }
  return Poly(std::move(s));
}

Elem PolyRing::eval(const Poly& x, Elem at) const noexcept {
  Elem acc{};
  const auto& c = x.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) acc = f_.add(f_.mul(acc, at), c[i]);
  return acc;
}

}  // namespace jacobicode
