// Copyright 2026 The jacobicode Authors
// SPDX-License-Identifier: Apache-2.0

#include "jacobicode/curve.hpp"

#include <algorithm>
#include <string>

#include "jacobicode/error.hpp"

namespace jacobicode {
namespace {

std::uint64_t power_or_overflow(std::uint64_t q, unsigned k) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < k; ++i) {
    if (r > kPointCountBudget) return kPointCountBudget + 1;
    r *= q;
  }
  return r;
}

// Curve coefficients pushed into F_{q^k}.
struct EmbeddedModel {
  std::vector<Elem> h, f;
};

EmbeddedModel embed_model(const CurveModel& c, const FieldExtension& ext) {
  EmbeddedModel m;
  for (auto e : c.h.coeffs()) m.h.push_back(ext.embed(e));
  for (auto e : c.f.coeffs()) m.f.push_back(ext.embed(e));
  return m;
}

inline Elem horner(const Field& F, const std::vector<Elem>& c, Elem x) {
  Elem acc{};
  for (std::size_t i = c.size(); i-- > 0;) acc = F.add(F.mul(acc, x), c[i]);
  return acc;
}

// Roots z of the leading-term equation at infinity for a real model.
std::vector<Elem> infinity_roots(const CurveModel& c, const FieldExtension& ext) {
  const Field& F = *ext.ext;
  if (c.imaginary()) return {Elem{}};
  const Elem f6 = ext.embed(c.f[6]);
  if (F.p() != 2) {
    auto r = F.sqrt(f6);
    if (!r) return {};
    std::vector<Elem> out{*r, F.neg(*r)};
    std::sort(out.begin(), out.end());
    return out;
  }
  const Elem h3 = ext.embed(c.h[3]);
  if (h3 == Field::zero()) return {*F.sqrt(f6)};
  const auto z = F.solve_artin_schreier(F.div(f6, F.sqr(h3)));
  if (!z) return {};
  std::vector<Elem> out{F.mul(*z, h3), F.mul(F.add(*z, Field::one()), h3)};
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

CurveModel validate_curve(FieldPtr field, const Poly& h, const Poly& f) {
  const Field& F = *field;
  const PolyRing R(F);
  const int df = f.degree();
  const int dh = h.degree();
  if (df != 5 && df != 6) throw Error(ErrorCode::WrongDegree, "deg f must be 5 or 6, got " + std::to_string(df));
  if (dh > 3) throw Error(ErrorCode::WrongDegree, "deg h must be at most 3");
  if (df == 5 && dh > 2) throw Error(ErrorCode::WrongDegree, "deg h must be at most 2 when deg f = 5");
  if (df == 5 && f.leading() != Field::one()) throw Error(ErrorCode::WrongDegree, "degree-5 f must be monic");

  CurveModel c{field, h, f, ModelKind::Imaginary};

  if (F.p() != 2) {
    // (y + h/2)^2 = f + h^2/4
    const Elem quarter = F.inv(F.from_int(4));
    c.f = R.add(f, R.scale(R.mul(h, h), quarter));
    c.h = Poly{};
    if (c.f.degree() < 5) throw Error(ErrorCode::GenusNotTwo, "completing the square drops deg f below 5");
    c.kind = c.f.degree() == 5 ? ModelKind::Imaginary : ModelKind::Real;
    if (R.gcd(c.f, R.derivative(c.f)).degree() > 0) {
      throw Error(ErrorCode::SingularModel, "f is not squarefree");
    }
    return c;
  }

  c.kind = df == 5 ? ModelKind::Imaginary : ModelKind::Real;
  if (h.is_zero()) throw Error(ErrorCode::SingularModel, "h = 0 in characteristic 2");

  // A singular affine point has h(x) = 0, y^2 = f(x) and h'(x) y = f'(x).
  // Squaring the last equation is injective in characteristic 2, which
  // eliminates y: h'(x)^2 f(x) = f'(x)^2.
  const Poly dh_dx = R.derivative(h);
  const Poly df_dx = R.derivative(f);
  const Poly eliminant = R.add(R.mul(R.mul(dh_dx, dh_dx), f), R.mul(df_dx, df_dx));
  if (R.gcd(h, eliminant).degree() > 0) {
    throw Error(ErrorCode::SingularModel, "singular affine point above a root of h");
  }

  // Chart at infinity: w^2 + H(z) w = F(z) with H(z) = z^3 h(1/z),
  // F(z) = z^6 f(1/z). At z = 0 the same elimination gives h_2^2 f_6 = f_5^2
  // when h_3 = 0.
  if (h[3] == Field::zero() && F.mul(F.sqr(h[2]), f[6]) == F.sqr(f[5])) {
    throw Error(ErrorCode::SingularModel, "singular point at infinity");
  }
  return c;
}

PointCount count_points(const CurveModel& curve, unsigned k) {
  const std::uint64_t big_q = power_or_overflow(curve.field->q(), k);
  if (k == 0 || big_q > kPointCountBudget) {
    throw Error(ErrorCode::BudgetExceeded, "q^k exceeds the enumeration budget");
  }
  const auto ext = extend_field(curve.field, k);
  const Field& F = *ext->ext;
  const auto m = embed_model(curve, *ext);
  const auto Q = static_cast<std::uint32_t>(big_q);

  std::uint64_t n = 0;
  if (F.p() != 2) {
    for (std::uint32_t xv = 0; xv < Q; ++xv) {
      const Elem fx = horner(F, m.f, Elem{xv});
      if (fx.value == 0) {
        n += 1;
      } else if (F.log(fx) % 2 == 0) {
        n += 2;
      }
    }
  } else {
    for (std::uint32_t xv = 0; xv < Q; ++xv) {
      const Elem x{xv};
      const Elem hx = horner(F, m.h, x);
      if (hx.value == 0) {
        n += 1;  // y = sqrt(f(x)) is unique
        continue;
      }
      // y = h(x) z turns the equation into z^2 + z = f(x) / h(x)^2.
      const Elem c = F.div(horner(F, m.f, x), F.sqr(hx));
      if (F.absolute_trace(c) == 0) n += 2;
    }
  }
  n += infinity_roots(curve, *ext).size();
  return PointCount{k, n};
}

PointSet curve_points(const CurveModel& curve, unsigned k) {
  const std::uint64_t big_q = power_or_overflow(curve.field->q(), k);
  if (k == 0 || big_q > kPointCountBudget) {
    throw Error(ErrorCode::BudgetExceeded, "q^k exceeds the enumeration budget");
  }
  PointSet out;
  out.extension = extend_field(curve.field, k);
  const Field& F = *out.extension->ext;
  const auto m = embed_model(curve, *out.extension);
  const auto Q = static_cast<std::uint32_t>(big_q);

  for (std::uint32_t xv = 0; xv < Q; ++xv) {
    const Elem x{xv};
    const Elem fx = horner(F, m.f, x);
    std::vector<Elem> ys;
    if (F.p() != 2) {
      if (auto r = F.sqrt(fx)) {
        ys.push_back(*r);
        if (r->value != 0) ys.push_back(F.neg(*r));
      }
    } else {
      const Elem hx = horner(F, m.h, x);
      if (hx.value == 0) {
        ys.push_back(*F.sqrt(fx));
      } else if (auto z = F.solve_artin_schreier(F.div(fx, F.sqr(hx)))) {
        ys.push_back(F.mul(*z, hx));
        ys.push_back(F.mul(F.add(*z, Field::one()), hx));
      }
    }
    std::sort(ys.begin(), ys.end());
    for (auto y : ys) out.points.push_back(CurvePoint{CurvePoint::Kind::Affine, x, y});
  }
  for (auto z : infinity_roots(curve, *out.extension)) {
    out.points.push_back(CurvePoint{CurvePoint::Kind::Infinity, Elem{}, z});
  }
  return out;
}

bool on_curve(const CurveModel& curve, Elem x, Elem y) {
  const Field& F = *curve.field;
  const PolyRing R(F);
  const Elem lhs = F.add(F.sqr(y), F.mul(R.eval(curve.h, x), y));
  return lhs == R.eval(curve.f, x);
}

}  // namespace jacobicode
