// Copyright 2026 The jacobicode Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <vector>

#include "jacobicode/gf.hpp"
#include "jacobicode/poly.hpp"

namespace jacobicode {

/// Largest q^k that count_points and curve_points will enumerate.
inline constexpr std::uint64_t kPointCountBudget = std::uint64_t{1} << 20;

enum class ModelKind {
  Imaginary,  // deg f = 5, one rational point at infinity
  Real,       // deg f = 6, zero or two points at infinity over any given field
};

/// A validated genus-2 model y^2 + h(x) y = f(x) over F_q.
///
/// In odd characteristic the model is stored with h = 0 (the square has been
/// completed), so `f` may differ from the polynomial that was passed in.
struct CurveModel {
  FieldPtr field;
  Poly h;
  Poly f;
  ModelKind kind = ModelKind::Imaginary;

  bool imaginary() const noexcept { return kind == ModelKind::Imaginary; }
};

/// Validates and normalizes a model.
///
/// Accepts deg f in {5, 6} with deg h <= 3 (deg h <= 2 when deg f = 5); a
/// degree-5 f must be monic. Throws WrongDegree, SingularModel, or
/// GenusNotTwo.
///
/// Odd characteristic: after completing the square, f must be squarefree.
/// Characteristic 2: h != 0, no affine point with h(x) = 0 and
/// h'(x)^2 f(x) = f'(x)^2 (checked as a gcd with h), and the chart at
/// infinity must be smooth.
CurveModel validate_curve(FieldPtr field, const Poly& h, const Poly& f);

struct PointCount {
  unsigned k = 1;
  std::uint64_t count = 0;
};

/// Exhaustive count of #C(F_{q^k}), including points at infinity.
/// Throws BudgetExceeded when q^k > kPointCountBudget.
PointCount count_points(const CurveModel& curve, unsigned k);

struct CurvePoint {
  enum class Kind { Affine, Infinity };
  Kind kind = Kind::Affine;
  /// Affine coordinates, elements of F_{q^k}. At infinity `y` holds the root
  /// z of the leading-term equation (z^2 + h_3 z = f_6 for real models, zero
  /// for the single point of an imaginary model) and `x` is zero.
  Elem x;
  Elem y;

  bool at_infinity() const noexcept { return kind == Kind::Infinity; }
  friend bool operator==(const CurvePoint&, const CurvePoint&) = default;
};

struct PointSet {
  ExtensionPtr extension;  // F_q -> F_{q^k}
  std::vector<CurvePoint> points;
};

/// The explicit point set over F_{q^k}: affine points sorted by (x, y),
/// then points at infinity. Same budget as count_points.
PointSet curve_points(const CurveModel& curve, unsigned k);

/// True when (x, y) in F_q^2 satisfies the model equation.
bool on_curve(const CurveModel& curve, Elem x, Elem y);

}  // namespace jacobicode
