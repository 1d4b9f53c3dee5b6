// Copyright 2026 The jacobicode Authors
// SPDX-License-Identifier: Apache-2.0

#include "jacobicode/gf.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>
#include <string>
#include <tuple>

#include "jacobicode/error.hpp"

namespace jacobicode {
namespace {

using Coeffs = std::vector<std::uint32_t>;

void trim(Coeffs& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

// Remainder of `a` modulo the monic polynomial `m` over F_p.
Coeffs mod_monic(Coeffs a, const Coeffs& m, std::uint32_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  while (a.size() > dm && !a.empty()) {
    const std::uint64_t lead = a.back();
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      const std::uint64_t sub = (lead * m[i]) % p;
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

Coeffs mulmod(const Coeffs& x, const Coeffs& y, const Coeffs& m, std::uint32_t p) {
  if (x.empty() || y.empty()) return {};
  Coeffs prod(x.size() + y.size() - 1, 0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j) {
      prod[i + j] = static_cast<std::uint32_t>(
          (prod[i + j] + static_cast<std::uint64_t>(x[i]) * y[j]) % p);
    }
  }
  return mod_monic(std::move(prod), m, p);
}

Coeffs powmod(Coeffs base, std::uint64_t e, const Coeffs& m, std::uint32_t p) {
  Coeffs result{1};
  base = mod_monic(std::move(base), m, p);
  while (e > 0) {
    if (e & 1) result = mulmod(result, base, m, p);
    base = mulmod(base, base, m, p);
    e >>= 1;
  }
  return result;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

Coeffs digits(std::uint64_t encoding, std::uint32_t p, unsigned a) {
  Coeffs c(a, 0);
  for (unsigned i = 0; i < a; ++i) {
    c[i] = static_cast<std::uint32_t>(encoding % p);
    encoding /= p;
  }
  return c;
}

std::uint32_t encode(const Coeffs& c, std::uint32_t p) {
  std::uint64_t v = 0;
  for (std::size_t i = c.size(); i-- > 0;) v = v * p + c[i];
  return static_cast<std::uint32_t>(v);
}

// Order of x modulo an irreducible m is q - 1.
bool x_is_primitive(const Coeffs& m, std::uint32_t p, std::uint64_t q) {
  for (std::uint64_t ell : prime_factors(q - 1)) {
    Coeffs r = powmod(Coeffs{0, 1}, (q - 1) / ell, m, p);
    if (r == Coeffs{1}) return false;
  }
  return true;
}

std::uint64_t checked_power(std::uint64_t p, unsigned a) {
  std::uint64_t q = 1;
  for (unsigned i = 0; i < a; ++i) {
    if (q > kHardFieldLimit) return kHardFieldLimit + 1;
    q *= p;
  }
  return q;
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

bool is_irreducible_mod_p(std::span<const std::uint32_t> poly, std::uint32_t p) {
  Coeffs f(poly.begin(), poly.end());
  trim(f);
  if (f.size() < 2) return false;
  const std::size_t deg = f.size() - 1;
  if (deg == 1) return true;
  // Make monic so every trial divisor reduces it the same way.
  {
    std::uint64_t inv = 1;
    for (std::uint64_t e = p - 2, b = f.back(); e > 0; e >>= 1, b = b * b % p) {
      if (e & 1) inv = inv * b % p;
    }
    for (auto& c : f) c = static_cast<std::uint32_t>(c * inv % p);
  }
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t e = 0; e < count; ++e) {
      Coeffs g = digits(e, p, static_cast<unsigned>(d));
      g.push_back(1);
      if (mod_monic(f, g, p).empty()) return false;
    }
  }
  return true;
}

std::vector<std::uint32_t> default_modulus(std::uint32_t p, unsigned a) {
  if (a == 1) return {0, 1};
  const std::uint64_t q = checked_power(p, a);
  for (std::uint64_t e = 1; e < q; ++e) {
    Coeffs m = digits(e, p, a);
    if (m[0] == 0) continue;
    m.push_back(1);
    if (!is_irreducible_mod_p(m, p)) continue;
    if (x_is_primitive(m, p, q)) return m;
  }
  throw Error(ErrorCode::InternalTripwire,
              "no primitive polynomial found for p=" + std::to_string(p) + " a=" + std::to_string(a));
}

Field::Field(std::uint32_t p, unsigned a, std::vector<std::uint32_t> modulus)
    : p_(p), a_(a), q_(static_cast<std::uint32_t>(checked_power(p, a))), modulus_(std::move(modulus)) {
  build_tables();
  build_trace();
}

void Field::build_tables() {
  const std::uint32_t order = q_ - 1;
  exp_.assign(2 * static_cast<std::size_t>(order), 0);
  log_.assign(q_, 0);

  if (a_ == 1) {
    std::uint32_t g = 1;
    if (p_ > 2) {
      const auto factors = prime_factors(order);
      for (g = 2; g < p_; ++g) {
        bool primitive = true;
        for (auto ell : factors) {
          std::uint64_t r = 1;
          for (std::uint64_t e = order / ell, b = g; e > 0; e >>= 1, b = b * b % p_) {
            if (e & 1) r = r * b % p_;
          }
          if (r == 1) {
            primitive = false;
            break;
          }
        }
        if (primitive) break;
      }
    }
    std::uint64_t cur = 1;
    for (std::uint32_t i = 0; i < order; ++i) {
      exp_[i] = static_cast<std::uint32_t>(cur);
      cur = cur * g % p_;
    }
  } else {
    Coeffs gen{0, 1};
    const bool x_primitive = x_is_primitive(modulus_, p_, q_);
    if (!x_primitive) {
      const auto factors = prime_factors(order);
      for (std::uint32_t e = 2; e < q_; ++e) {
        Coeffs cand = digits(e, p_, a_);
        bool primitive = true;
        for (auto ell : factors) {
          if (powmod(cand, order / ell, modulus_, p_) == Coeffs{1}) {
            primitive = false;
            break;
          }
        }
        if (primitive) {
          gen = cand;
          trim(gen);
          break;
        }
      }
    }
    Coeffs cur(a_, 0);
    cur[0] = 1;
    for (std::uint32_t i = 0; i < order; ++i) {
      exp_[i] = encode(cur, p_);
      if (x_primitive) {
        // Multiply by w: shift up and fold the overflow back with the modulus.
        const std::uint64_t top = cur[a_ - 1];
        for (unsigned j = a_ - 1; j > 0; --j) {
          cur[j] = static_cast<std::uint32_t>((cur[j - 1] + p_ - top * modulus_[j] % p_) % p_);
        }
        cur[0] = static_cast<std::uint32_t>((p_ - top * modulus_[0] % p_) % p_);
      } else {
        cur = mulmod(cur, gen, modulus_, p_);
        cur.resize(a_, 0);
      }
    }
  }

  std::vector<bool> seen(q_, false);
  for (std::uint32_t i = 0; i < order; ++i) {
    const std::uint32_t v = exp_[i];
    if (v == 0 || seen[v]) {
      throw Error(ErrorCode::InternalTripwire, "log table construction failed");
    }
    seen[v] = true;
    log_[v] = i;
    exp_[i + order] = v;
  }

  if (p_ != 2 && a_ > 1 && q_ <= 256) {
    add_table_.resize(static_cast<std::size_t>(q_) * q_);
    for (std::uint32_t x = 0; x < q_; ++x) {
      for (std::uint32_t y = 0; y < q_; ++y) {
        std::uint32_t r = 0, mul = 1, xx = x, yy = y;
        for (unsigned i = 0; i < a_; ++i) {
          r += ((xx % p_ + yy % p_) % p_) * mul;
          xx /= p_;
          yy /= p_;
          mul *= p_;
        }
        add_table_[static_cast<std::size_t>(x) * q_ + y] = r;
      }
    }
  }
}

void Field::build_trace() {
  basis_trace_.assign(a_, 0);
  std::uint32_t w_power = 1;  // encoding of w^i is p^i
  for (unsigned i = 0; i < a_; ++i) {
    Elem t{w_power};
    Elem acc = zero();
    Elem frob = t;
    for (unsigned j = 0; j < a_; ++j) {
      acc = add(acc, frob);
      frob = pow(frob, p_);
    }
    if (acc.value >= p_) {
      throw Error(ErrorCode::InternalTripwire, "trace left the prime field");
    }
    basis_trace_[i] = acc.value;
    w_power *= p_;
  }

  if (p_ == 2) {
    // Echelon basis of the image of z -> z^2 + z, keyed by highest set bit.
    std::vector<std::pair<std::uint32_t, std::uint32_t>> by_pivot(a_, {0, 0});
    for (unsigned i = 0; i < a_; ++i) {
      const Elem e{1u << i};
      std::uint32_t v = add(sqr(e), e).value;
      std::uint32_t m = 1u << i;
      while (v != 0) {
        const unsigned bit = 31 - static_cast<unsigned>(std::countl_zero(v));
        if (by_pivot[bit].first == 0) {
          by_pivot[bit] = {v, m};
          break;
        }
        v ^= by_pivot[bit].first;
        m ^= by_pivot[bit].second;
      }
    }
    as_basis_ = std::move(by_pivot);
  }
}

Elem Field::from_int(std::int64_t v) const noexcept {
  const std::int64_t r = v % static_cast<std::int64_t>(p_);
  return Elem{static_cast<std::uint32_t>(r < 0 ? r + p_ : r)};
}

Elem Field::from_encoding(std::uint64_t encoding) const {
  if (encoding >= q_) {
    throw Error(ErrorCode::ParseError,
                "element encoding " + std::to_string(encoding) + " out of range for q=" + std::to_string(q_));
  }
  return Elem{static_cast<std::uint32_t>(encoding)};
}

Elem Field::from_coeffs(std::span<const std::uint32_t> coeffs) const {
  if (coeffs.size() != a_) {
    throw Error(ErrorCode::ParseError, "expected " + std::to_string(a_) + " coefficients");
  }
  for (auto c : coeffs) {
    if (c >= p_) throw Error(ErrorCode::ParseError, "coefficient out of range");
  }
  return Elem{encode(Coeffs(coeffs.begin(), coeffs.end()), p_)};
}

std::vector<std::uint32_t> Field::coeffs(Elem x) const { return digits(x.value, p_, a_); }

Elem Field::add(Elem x, Elem y) const noexcept {
  if (p_ == 2) return Elem{x.value ^ y.value};
  if (a_ == 1) {
    const std::uint32_t s = x.value + y.value;
    return Elem{s >= p_ ? s - p_ : s};
  }
  if (!add_table_.empty()) return Elem{add_table_[static_cast<std::size_t>(x.value) * q_ + y.value]};
  std::uint32_t r = 0, mul = 1, xx = x.value, yy = y.value;
  while (xx != 0 || yy != 0) {
    std::uint32_t d = xx % p_ + yy % p_;
    if (d >= p_) d -= p_;
    r += d * mul;
    xx /= p_;
    yy /= p_;
    mul *= p_;
  }
  return Elem{r};
}

Elem Field::neg(Elem x) const noexcept {
  if (p_ == 2 || x.value == 0) return x;
  if (a_ == 1) return Elem{p_ - x.value};
  std::uint32_t r = 0, mul = 1, xx = x.value;
  while (xx != 0) {
    const std::uint32_t d = xx % p_;
    r += (d == 0 ? 0 : p_ - d) * mul;
    xx /= p_;
    mul *= p_;
  }
  return Elem{r};
}

Elem Field::sub(Elem x, Elem y) const noexcept { return add(x, neg(y)); }

Elem Field::inv(Elem x) const {
  if (x.value == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  const std::uint32_t order = q_ - 1;
  return Elem{exp_[(order - log_[x.value]) % order]};
}

Elem Field::pow(Elem x, std::uint64_t e) const noexcept {
  if (e == 0) return one();
  if (x.value == 0) return zero();
  const std::uint64_t order = q_ - 1;
  const std::uint64_t l = (static_cast<std::uint64_t>(log_[x.value]) * (e % order)) % order;
  return Elem{exp_[l]};
}

bool Field::is_square(Elem x) const noexcept {
  if (x.value == 0 || p_ == 2) return true;
  return log_[x.value] % 2 == 0;
}

std::optional<Elem> Field::sqrt(Elem x) const noexcept {
  if (x.value == 0) return x;
  const std::uint32_t l = log_[x.value];
  if (p_ == 2) {
    // q - 1 is odd, so halving the log is always possible modulo q - 1.
    const std::uint64_t order = q_ - 1;
    return Elem{exp_[(l % 2 == 0 ? l / 2 : (l + order) / 2) % order]};
  }
  if (l % 2 != 0) return std::nullopt;
  return Elem{exp_[l / 2]};
}

std::uint32_t Field::absolute_trace(Elem x) const noexcept {
  std::uint64_t acc = 0;
  std::uint32_t v = x.value;
  for (unsigned i = 0; i < a_ && v != 0; ++i) {
    acc += static_cast<std::uint64_t>(v % p_) * basis_trace_[i];
    v /= p_;
  }
  return static_cast<std::uint32_t>(acc % p_);
}

std::optional<Elem> Field::solve_artin_schreier(Elem c) const {
  if (p_ != 2) throw Error(ErrorCode::Usage, "Artin-Schreier solver needs characteristic 2");
  std::uint32_t v = c.value;
  std::uint32_t z = 0;
  while (v != 0) {
    const unsigned bit = 31 - static_cast<unsigned>(std::countl_zero(v));
    if (as_basis_[bit].first == 0) return std::nullopt;
    v ^= as_basis_[bit].first;
    z ^= as_basis_[bit].second;
  }
  return Elem{z};
}

// ---------------------------------------------------------------------------

namespace {

std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}

std::map<std::pair<std::uint32_t, unsigned>, FieldPtr>& default_cache() {
  static std::map<std::pair<std::uint32_t, unsigned>, FieldPtr> cache;
  return cache;
}

using ExtensionKey = std::tuple<std::uint32_t, unsigned, Coeffs, unsigned>;
std::map<ExtensionKey, ExtensionPtr>& extension_cache() {
  static std::map<ExtensionKey, ExtensionPtr> cache;
  return cache;
}

}  // namespace

FieldPtr make_field(std::uint32_t p, unsigned a, std::optional<std::vector<std::uint32_t>> modulus,
                    FieldOptions options) {
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (a == 0) throw Error(ErrorCode::Usage, "extension degree a must be positive");
  const std::uint64_t q = checked_power(p, a);
  if (q > kHardFieldLimit || (q > kDefaultFieldLimit && !options.allow_large)) {
    throw Error(ErrorCode::FieldTooLarge, "q=" + std::to_string(p) + "^" + std::to_string(a) + " exceeds the limit");
  }

  if (modulus) {
    Coeffs m = *modulus;
    if (m.size() != a + 1 || m.back() != 1) {
      throw Error(ErrorCode::ParseError, "modulus must be monic of degree " + std::to_string(a));
    }
    for (auto c : m) {
      if (c >= p) throw Error(ErrorCode::ParseError, "modulus coefficient out of range");
    }
    if (!is_irreducible_mod_p(m, p)) throw Error(ErrorCode::ReducibleModulus, "modulus factors over F_p");
  }

  std::lock_guard lock(cache_mutex());
  auto& cache = default_cache();
  auto it = cache.find({p, a});
  if (it == cache.end()) {
    auto field = std::make_shared<const Field>(p, a, default_modulus(p, a));
    it = cache.emplace(std::pair{p, a}, std::move(field)).first;
  }
  if (!modulus || *modulus == it->second->modulus()) return it->second;
  return std::make_shared<const Field>(p, a, std::move(*modulus));
}

FieldPtr field_of_order(std::uint64_t q, FieldOptions options) {
  if (q < 2) throw Error(ErrorCode::NotPrime, "field order must be at least 2");
  std::uint64_t p = q;
  for (std::uint64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  unsigned a = 0;
  std::uint64_t r = q;
  while (r % p == 0) {
    r /= p;
    ++a;
  }
  if (r != 1) throw Error(ErrorCode::NotPrime, std::to_string(q) + " is not a prime power");
  if (p > UINT32_MAX) throw Error(ErrorCode::FieldTooLarge, "characteristic too large");
  return make_field(static_cast<std::uint32_t>(p), a, std::nullopt, options);
}

ExtensionPtr extend_field(const FieldPtr& base, unsigned k) {
  if (k == 0) throw Error(ErrorCode::Usage, "extension degree must be positive");
  const std::uint32_t p = base->p();
  const unsigned a = base->a();
  const std::uint64_t big_q = checked_power(p, a * k);
  if (big_q > kHardFieldLimit) {
    throw Error(ErrorCode::FieldTooLarge,
                "q^" + std::to_string(k) + " exceeds " + std::to_string(kHardFieldLimit));
  }

  ExtensionKey key{p, a, base->modulus(), k};
  {
    std::lock_guard lock(cache_mutex());
    auto& cache = extension_cache();
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }

  auto out = std::make_shared<FieldExtension>();
  out->base = base;
  out->degree = k;
  out->ext = k == 1 ? base : make_field(p, a * k, std::nullopt, FieldOptions{.allow_large = true});
  const Field& big = *out->ext;
  const std::uint32_t q = base->q();
  out->image.resize(q);

  if (k == 1) {
    for (std::uint32_t x = 0; x < q; ++x) out->image[x] = Elem{x};
  } else if (a == 1) {
    for (std::uint32_t x = 0; x < q; ++x) out->image[x] = big.from_int(x);
  } else {
    // A root of the base modulus lies in the order-(q-1) subgroup of F_{q^k}^*.
    const std::uint64_t stride = (big_q - 1) / (q - 1);
    const auto& m = base->modulus();
    std::optional<Elem> root;
    for (std::uint64_t j = 0; j < q - 1 && !root; ++j) {
      const Elem cand = big.exp(j * stride);
      Elem acc = Field::zero();
      for (std::size_t i = m.size(); i-- > 0;) acc = big.add(big.mul(acc, cand), big.from_int(m[i]));
      if (acc == Field::zero()) root = cand;
    }
    if (!root) throw Error(ErrorCode::InternalTripwire, "base modulus has no root in the extension");
    for (std::uint32_t x = 0; x < q; ++x) {
      const auto c = base->coeffs(Elem{x});
      Elem acc = Field::zero();
      for (std::size_t i = c.size(); i-- > 0;) acc = big.add(big.mul(acc, *root), big.from_int(c[i]));
      out->image[x] = acc;
    }
  }

  std::lock_guard lock(cache_mutex());
  auto [it, inserted] = extension_cache().emplace(std::move(key), std::move(out));
  return it->second;
}

// ---------------------------------------------------------------------------

FieldElement::FieldElement(FieldPtr field, Elem value) : field_(std::move(field)), value_(value) {
  if (value_.value >= field_->q()) throw Error(ErrorCode::ParseError, "element out of range");
}

FieldElement FieldElement::from_encoding(FieldPtr field, std::uint64_t encoding) {
  const Elem e = field->from_encoding(encoding);
  return FieldElement(std::move(field), e);
}

namespace {
const Field& common_field(const FieldElement& x, const FieldElement& y) {
  if (x.field() != y.field() && !x.field()->same_as(*y.field())) {
    throw Error(ErrorCode::SpecMismatch, "operands belong to different fields");
  }
  return *x.field();
}
}  // namespace

FieldElement FieldElement::inverse() const { return FieldElement(field_, field_->inv(value_)); }

FieldElement operator+(const FieldElement& x, const FieldElement& y) {
  return FieldElement(x.field(), common_field(x, y).add(x.elem(), y.elem()));
}
FieldElement operator-(const FieldElement& x, const FieldElement& y) {
  return FieldElement(x.field(), common_field(x, y).sub(x.elem(), y.elem()));
}
FieldElement operator*(const FieldElement& x, const FieldElement& y) {
  return FieldElement(x.field(), common_field(x, y).mul(x.elem(), y.elem()));
}
FieldElement operator/(const FieldElement& x, const FieldElement& y) {
  return FieldElement(x.field(), common_field(x, y).div(x.elem(), y.elem()));
}
FieldElement FieldElement::operator-() const { return FieldElement(field_, field_->neg(value_)); }

bool operator==(const FieldElement& x, const FieldElement& y) {
  return x.elem() == y.elem() && (x.field() == y.field() || x.field()->same_as(*y.field()));
}

}  // namespace jacobicode
