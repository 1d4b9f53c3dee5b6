// Copyright 2026 The jacobicode Authors
// SPDX-License-Identifier: Apache-2.0

#include "jacobicode/zeta.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "jacobicode/error.hpp"

namespace jacobicode {
namespace {

__extension__ typedef __int128 i128;

std::uint64_t isqrt(std::uint64_t n) noexcept {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

std::uint32_t characteristic_of(std::uint64_t q) {
  if (q < 2) throw Error(ErrorCode::InconsistentCounts, "q must be at least 2");
  for (std::uint64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      std::uint64_t r = q;
      while (r % d == 0) r /= d;
      if (r != 1) throw Error(ErrorCode::NotPrime, std::to_string(q) + " is not a prime power");
      return static_cast<std::uint32_t>(d);
    }
  }
  return static_cast<std::uint32_t>(q);
}

void trim(IntPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

// Quotient and remainder by a monic divisor, exactly.
std::pair<IntPoly, IntPoly> divmod_monic(const IntPoly& f, const IntPoly& g) {
  if (g.empty() || g.back() != 1) throw Error(ErrorCode::Usage, "divisor must be monic");
  std::vector<i128> r(f.begin(), f.end());
  const std::size_t dg = g.size() - 1;
  if (f.size() < g.size()) return {IntPoly{}, f};
  std::vector<i128> quot(f.size() - dg, 0);
  for (std::size_t i = f.size(); i-- > dg;) {
    const i128 c = r[i];
    quot[i - dg] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dg; ++j) r[i - dg + j] -= c * g[j];
  }
  auto narrow = [](const std::vector<i128>& v, std::size_t n) {
    IntPoly out(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (v[i] > INT64_MAX || v[i] < INT64_MIN) throw Error(ErrorCode::InternalTripwire, "coefficient overflow");
      out[i] = static_cast<std::int64_t>(v[i]);
    }
    return out;
  };
  IntPoly q = narrow(quot, quot.size());
  IntPoly rem = narrow(r, dg);
  trim(q);
  trim(rem);
  return {q, rem};
}

i128 eval(const IntPoly& f, std::int64_t x) {
  i128 acc = 0;
  for (std::size_t i = f.size(); i-- > 0;) acc = acc * x + f[i];
  return acc;
}

std::vector<std::int64_t> divisors(std::uint64_t n) {
  std::vector<std::int64_t> out;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(static_cast<std::int64_t>(d));
      if (d * d != n) out.push_back(static_cast<std::int64_t>(n / d));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

IntPoly WeilData::polynomial() const {
  const auto qq = static_cast<std::int64_t>(q);
  return IntPoly{qq * qq, qq * c1, c2, c1, 1};
}

std::uint64_t serre_constant(std::uint64_t q) noexcept { return isqrt(4 * q); }

WeilData weil_from_counts(std::uint64_t q, std::int64_t n1, std::int64_t n2) {
  if (n1 < 0 || n2 < 0) throw Error(ErrorCode::InconsistentCounts, "point counts must be non-negative");
  const auto qq = static_cast<std::int64_t>(q);
  const std::uint32_t p = characteristic_of(q);
  const std::int64_t s1 = qq + 1 - n1;       // sum of the roots
  const std::int64_t s2 = qq * qq + 1 - n2;  // sum of their squares
  const std::int64_t twice_c2 = s1 * s1 - s2;
  if (twice_c2 % 2 != 0) {
    throw Error(ErrorCode::InconsistentCounts, "c2 = " + std::to_string(twice_c2) + "/2 is not an integer");
  }
  WeilData w{q, p, n1 - (qq + 1), twice_c2 / 2};
  validate_weil(w);
  return w;
}

void validate_weil(const WeilData& w) {
  const auto m = static_cast<std::int64_t>(serre_constant(w.q));
  if (std::abs(w.c1) > 2 * m) {
    throw Error(ErrorCode::InconsistentCounts,
                "|c1| = " + std::to_string(std::abs(w.c1)) + " exceeds 2[2 sqrt q] = " + std::to_string(2 * m));
  }
  if (!roots_on_weil_circle(w)) {
    throw Error(ErrorCode::InconsistentCounts, "roots of " + format_int_poly(w.polynomial()) +
                                                   " are not all of modulus sqrt(q)");
  }
}

bool roots_on_weil_circle(const WeilData& w, double tol) {
  const auto q = static_cast<double>(w.q);
  const auto qq = static_cast<std::int64_t>(w.q);
  // s^2 + c1 s + (c2 - 2q): its discriminant is an exact integer.
  const i128 disc = static_cast<i128>(w.c1) * w.c1 - 4 * static_cast<i128>(w.c2 - 2 * qq);
  if (disc < 0) return false;
  const double root_disc = std::sqrt(static_cast<double>(disc));
  const double bound = 2.0 * std::sqrt(q) * (1.0 + tol);
  for (double s : {(-static_cast<double>(w.c1) + root_disc) / 2.0, (-static_cast<double>(w.c1) - root_disc) / 2.0}) {
    if (std::abs(s) > bound) return false;
  }
  return true;
}

std::array<std::complex<double>, 4> weil_roots(const WeilData& w) {
  using C = std::complex<double>;
  const auto q = static_cast<double>(w.q);
  const C disc(static_cast<double>(w.c1) * w.c1 - 4.0 * (static_cast<double>(w.c2) - 2.0 * q), 0.0);
  const C r = std::sqrt(disc);
  std::array<std::complex<double>, 4> out;
  std::size_t i = 0;
  for (C s : {(-static_cast<double>(w.c1) + r) / 2.0, (-static_cast<double>(w.c1) - r) / 2.0}) {
    const C d = std::sqrt(s * s - 4.0 * q);
    out[i++] = (s + d) / 2.0;
    out[i++] = (s - d) / 2.0;
  }
  return out;
}

WideInt extension_counts(const WeilData& w, unsigned k) {
  if (k < 1 || k > 8) throw Error(ErrorCode::Usage, "extension degree must be in [1, 8]");
  const WideInt q = w.q;
  // Elementary symmetric functions of the roots.
  const std::array<WideInt, 5> e{1, -WideInt(w.c1), WideInt(w.c2), -q * w.c1, q * q};
  std::array<WideInt, 9> ps{};
  for (unsigned n = 1; n <= k; ++n) {
    WideInt acc = 0;
    for (unsigned i = 1; i <= std::min(n - 1, 4u); ++i) {
      const WideInt term = e[i] * ps[n - i];
      acc += (i % 2 == 1) ? term : -term;
    }
    if (n <= 4) {
      const WideInt term = e[n] * static_cast<int>(n);
      acc += (n % 2 == 1) ? term : -term;
    }
    ps[n] = acc;
  }
  return boost::multiprecision::pow(q, k) + 1 - ps[k];
}

std::int64_t jacobian_order(const WeilData& w) {
  const auto q = static_cast<std::int64_t>(w.q);
  const std::int64_t direct = 1 + w.c1 + w.c2 + q * w.c1 + q * q;
  const WideInt n1 = extension_counts(w, 1);
  const WideInt n2 = extension_counts(w, 2);
  const WideInt twice = n2 + n1 * n1;
  if (twice % 2 != 0 || twice / 2 - q != direct) {
    throw Error(ErrorCode::InternalTripwire, "f_A(1) disagrees with (N2 + N1^2)/2 - q");
  }
  return direct;
}

IntPoly int_poly_mul(const IntPoly& x, const IntPoly& y) {
  if (x.empty() || y.empty()) return {};
  IntPoly out(x.size() + y.size() - 1, 0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < y.size(); ++j) out[i + j] += x[i] * y[j];
  }
  trim(out);
  return out;
}

bool weil_poly_divides(const IntPoly& g, const IntPoly& f) { return divmod_monic(f, g).second.empty(); }

WeilFactorization factor_weil(const WeilData& w) {
  IntPoly rem = w.polynomial();
  std::vector<IntPoly> found;

  const auto q = static_cast<std::int64_t>(w.q);
  const auto root_q = static_cast<std::int64_t>(isqrt(w.q));
  if (root_q * root_q == q) {
    for (std::int64_t r : {root_q, -root_q}) {
      while (rem.size() > 1 && eval(rem, r) == 0) {
        const IntPoly lin{-r, 1};
        rem = divmod_monic(rem, lin).first;
        found.push_back(lin);
      }
    }
  }

  if (rem.size() == 5) {
    const std::uint64_t c0 = static_cast<std::uint64_t>(std::abs(rem[0]));
    bool split = false;
    for (std::int64_t d : divisors(c0)) {
      for (std::int64_t gamma : {-d, d}) {
        const auto bound = static_cast<std::int64_t>(std::ceil(2.0 * std::sqrt(static_cast<double>(d))));
        for (std::int64_t b = -bound; b <= bound && !split; ++b) {
          const IntPoly g{gamma, b, 1};
          auto [quot, r] = divmod_monic(rem, g);
          if (r.empty()) {
            found.push_back(g);
            found.push_back(quot);
            rem = IntPoly{1};
            split = true;
          }
        }
        if (split) break;
      }
      if (split) break;
    }
  }
  if (rem.size() > 1) found.push_back(rem);

  std::sort(found.begin(), found.end(), [](const IntPoly& x, const IntPoly& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return std::lexicographical_compare(x.rbegin(), x.rend(), y.rbegin(), y.rend());
  });

  WeilFactorization out;
  for (auto& g : found) {
    if (!out.factors.empty() && out.factors.back().first == g) {
      ++out.factors.back().second;
    } else {
      out.factors.emplace_back(g, 1);
    }
  }

  // Tripwire: the product must reproduce f_A.
  IntPoly prod{1};
  for (const auto& [g, mult] : out.factors) {
    for (unsigned i = 0; i < mult; ++i) prod = int_poly_mul(prod, g);
  }
  if (prod != w.polynomial()) throw Error(ErrorCode::InternalTripwire, "factorization does not multiply back");

  const bool has_linear = std::any_of(out.factors.begin(), out.factors.end(),
                                      [](const auto& fm) { return fm.first.size() == 2; });
  if (has_linear) {
    out.shape = FactorShape::HasLinearFactors;
  } else if (out.factors.size() == 1 && out.factors[0].second == 1) {
    out.shape = FactorShape::IrreducibleQuartic;
  } else if (out.factors.size() == 1) {
    out.shape = FactorShape::SquareOfQuadratic;
  } else {
    out.shape = FactorShape::TwoQuadratics;
  }
  return out;
}

SimplicityVerdict classify_simplicity(const WeilData& w) {
  const auto fac = factor_weil(w);
  switch (fac.shape) {
    case FactorShape::IrreducibleQuartic:
      return {Simplicity::Simple, "irreducible-quartic"};
    case FactorShape::HasLinearFactors:
      return {Simplicity::NotSimple, "linear-factors"};
    case FactorShape::TwoQuadratics:
      return {Simplicity::NotSimple, "two-quadratics"};
    case FactorShape::SquareOfQuadratic: {
      const IntPoly& g = fac.factors[0].first;
      if (g[0] != static_cast<std::int64_t>(w.q)) return {Simplicity::Unknown, "square-unexpected-constant"};
      if (std::gcd(g[1], static_cast<std::int64_t>(w.p)) == 1) return {Simplicity::NotSimple, "ordinary-square"};
      return {Simplicity::Unknown, "supersingular-square"};
    }
  }
  return {Simplicity::Unknown, "unreachable"};
}

std::string to_string(FactorShape s) {
  switch (s) {
    case FactorShape::IrreducibleQuartic: return "IrreducibleQuartic";
    case FactorShape::TwoQuadratics: return "TwoQuadratics";
    case FactorShape::SquareOfQuadratic: return "SquareOfQuadratic";
    case FactorShape::HasLinearFactors: return "HasLinearFactors";
  }
  return "?";
}

std::string to_string(Simplicity s) {
  switch (s) {
    case Simplicity::Simple: return "Simple";
    case Simplicity::NotSimple: return "NotSimple";
    case Simplicity::Unknown: return "Unknown";
  }
  return "?";
}

std::string format_int_poly(const IntPoly& f, char var) {
  if (f.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = f.size(); i-- > 0;) {
    const std::int64_t c = f[i];
    if (c == 0) continue;
    const std::int64_t mag = std::abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (mag != 1 || i == 0) os << mag;
    if (i >= 1) os << var;
    if (i >= 2) os << '^' << i;
    first = false;
  }
  return os.str();
}

}  // namespace jacobicode
