// Copyright 2026 The jacobicode Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <boost/multiprecision/cpp_int.hpp>
#include <complex>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace jacobicode {

/// Exact integer wide enough for q^8 with q <= 2^16; overflow throws.
using WideInt = boost::multiprecision::checked_int256_t;

/// Monic-or-not integer polynomial, low degree first, no trailing zeros.
using IntPoly = std::vector<std::int64_t>;

/// The quartic Weil polynomial t^4 + c1 t^3 + c2 t^2 + q c1 t + q^2 of the
/// Jacobian of a genus-2 curve. c1 is the trace tau, so #C(F_q) = q + 1 + c1.
struct WeilData {
  std::uint64_t q = 0;
  std::uint32_t p = 0;
  std::int64_t c1 = 0;
  std::int64_t c2 = 0;

  IntPoly polynomial() const;
  std::int64_t trace() const noexcept { return c1; }

  friend bool operator==(const WeilData&, const WeilData&) = default;
};

/// floor(2 sqrt(q)), computed as isqrt(4q).
std::uint64_t serre_constant(std::uint64_t q) noexcept;

/// Recovers (c1, c2) from #C(F_q) and #C(F_{q^2}). Throws InconsistentCounts
/// when c2 is not integral, |c1| > 2 serre_constant(q), or the roots are not
/// all of modulus sqrt(q).
WeilData weil_from_counts(std::uint64_t q, std::int64_t n1, std::int64_t n2);

/// Throws InconsistentCounts unless the WeilData invariants hold.
void validate_weil(const WeilData& w);

/// The four complex roots, numerically.
std::array<std::complex<double>, 4> weil_roots(const WeilData& w);

/// Root-modulus check, double precision with tolerance `tol` (relative to
/// sqrt(q)). Works through s = t + q/t, where each root pair of modulus
/// sqrt(q) corresponds to a real root |s| <= 2 sqrt(q) of
/// s^2 + c1 s + (c2 - 2q).
bool roots_on_weil_circle(const WeilData& w, double tol = 1e-9);

/// #C(F_{q^k}) for 1 <= k <= 8 by Newton's identities on the roots of f_A.
WideInt extension_counts(const WeilData& w, unsigned k);

/// #J_C(F_q) = f_A(1), cross-checked against (N2 + N1^2)/2 - q.
std::int64_t jacobian_order(const WeilData& w);

enum class FactorShape { IrreducibleQuartic, TwoQuadratics, SquareOfQuadratic, HasLinearFactors };

struct WeilFactorization {
  std::vector<std::pair<IntPoly, unsigned>> factors;  // (monic factor, multiplicity)
  FactorShape shape = FactorShape::IrreducibleQuartic;
};

/// Complete factorization over Z by finite search: linear factors t -+ sqrt(q)
/// when q is a square, then quadratic t^2 + b t + g with g dividing the
/// constant term, verified by exact division. Factors are sorted by degree,
/// then coefficients.
WeilFactorization factor_weil(const WeilData& w);

/// Exact divisibility of monic integer polynomials. Throws Usage when g is
/// not monic.
bool weil_poly_divides(const IntPoly& g, const IntPoly& f);

IntPoly int_poly_mul(const IntPoly& x, const IntPoly& y);

enum class Simplicity { Simple, NotSimple, Unknown };

struct SimplicityVerdict {
  Simplicity verdict = Simplicity::Unknown;
  std::string reason;
};

/// Simple iff f_A is irreducible. Linear factors or two distinct quadratic
/// factors mean the Jacobian is isogenous to a product. For (t^2 + b t + q)^2
/// the surface is isogenous to E x E when gcd(b, p) = 1; otherwise the verdict
/// is Unknown.
SimplicityVerdict classify_simplicity(const WeilData& w);

std::string to_string(FactorShape s);
std::string to_string(Simplicity s);
/// Human-readable polynomial in t, highest degree first.
std::string format_int_poly(const IntPoly& f, char var = 't');

}  // namespace jacobicode
