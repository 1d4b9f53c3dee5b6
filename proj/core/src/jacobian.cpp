// Copyright 2026 The jacobicode Authors
// SPDX-License-Identifier: Apache-2.0

#include "jacobicode/jacobian.hpp"

#include <algorithm>
#include <string>

#include "jacobicode/error.hpp"
#include "jacobicode/zeta.hpp"

namespace jacobicode {
namespace {

CurveModel require_imaginary(CurveModel curve) {
  if (!curve.imaginary()) {
    throw Error(ErrorCode::RealModelUnsupported, "Mumford arithmetic needs an imaginary (deg f = 5) model");
  }
  return curve;
}

}  // namespace

Jacobian::Jacobian(CurveModel curve) : curve_(require_imaginary(std::move(curve))), ring_(*curve_.field) {}

bool Jacobian::is_valid(const MumfordDivisor& d) const {
  const auto& R = ring_;
  if (d.u.is_zero() || d.u.degree() > 2 || d.u.leading() != Field::one()) return false;
  if (d.v.degree() >= d.u.degree()) return false;
  const Poly lhs = R.sub(R.add(R.mul(d.v, d.v), R.mul(curve_.h, d.v)), curve_.f);
  return R.divides(d.u, lhs);
}

MumfordDivisor Jacobian::reduce(Poly u, Poly v) const {
  const auto& R = ring_;
  v = R.mod(v, u);
  while (u.degree() > 2) {
    // u' = (f - v h - v^2) / u,  v' = (-h - v) mod u'
    Poly next_u = R.div(R.sub(R.sub(curve_.f, R.mul(v, curve_.h)), R.mul(v, v)), u);
    Poly next_v = R.mod(R.neg(R.add(curve_.h, v)), next_u);
    u = std::move(next_u);
    v = std::move(next_v);
  }
  u = R.monic(u);
  v = R.mod(v, u);
  return MumfordDivisor{std::move(u), std::move(v)};
}

MumfordDivisor Jacobian::add(const MumfordDivisor& a, const MumfordDivisor& b) const {
  if (a.is_identity()) return b;
  if (b.is_identity()) return a;
  const auto& R = ring_;
  // d1 = e1 u1 + e2 u2, then d = c1 d1 + c2 (v1 + v2 + h).
  const auto g1 = R.xgcd(a.u, b.u);
  const auto g2 = R.xgcd(g1.d, R.add(R.add(a.v, b.v), curve_.h));
  const Poly& d = g2.d;
  const Poly s1 = R.mul(g2.s, g1.s);
  const Poly s2 = R.mul(g2.s, g1.t);
  const Poly& s3 = g2.t;

  Poly u = R.mul(a.u, b.u);
  if (d.degree() > 0) u = R.div(u, R.mul(d, d));
  Poly v = R.add(R.add(R.mul(R.mul(s1, a.u), b.v), R.mul(R.mul(s2, b.u), a.v)),
                 R.mul(s3, R.add(R.mul(a.v, b.v), curve_.f)));
  if (d.degree() > 0) v = R.div(v, d);
  return reduce(std::move(u), std::move(v));
}

MumfordDivisor Jacobian::neg(const MumfordDivisor& d) const {
  if (d.is_identity()) return d;
  const auto& R = ring_;
  return MumfordDivisor{d.u, R.mod(R.neg(R.add(d.v, curve_.h)), d.u)};
}

MumfordDivisor Jacobian::scalar_mul(std::int64_t n, const MumfordDivisor& d) const {
  MumfordDivisor base = n < 0 ? neg(d) : d;
  auto e = static_cast<std::uint64_t>(n < 0 ? -n : n);
  MumfordDivisor acc = identity();
  while (e > 0) {
    if (e & 1) acc = add(acc, base);
    e >>= 1;
    if (e > 0) base = add(base, base);
  }
  return acc;
}

MumfordDivisor cantor_add(const CurveModel& curve, const MumfordDivisor& a, const MumfordDivisor& b) {
  const Jacobian J(curve);
  if (!J.is_valid(a) || !J.is_valid(b)) throw Error(ErrorCode::InvalidDivisor, "operand is not a reduced divisor");
  return J.add(a, b);
}

MumfordDivisor mumford_neg(const CurveModel& curve, const MumfordDivisor& d) {
  const Jacobian J(curve);
  if (!J.is_valid(d)) throw Error(ErrorCode::InvalidDivisor, "operand is not a reduced divisor");
  return J.neg(d);
}

// ---------------------------------------------------------------------------

EnumeratedJacobian::EnumeratedJacobian(Jacobian group, std::vector<MumfordDivisor> elements)
    : group_(std::move(group)), elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  const std::uint32_t q = group_.field().q();
  index_.reserve(elements_.size());
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    index_.emplace(key(elements_[i], q), i);
    if (theta_membership(elements_[i])) theta_.push_back(i);
  }
}

std::uint64_t EnumeratedJacobian::key(const MumfordDivisor& d, std::uint32_t q) {
  std::uint64_t k = static_cast<std::uint64_t>(d.u.degree());
  for (int i = 0; i < 2; ++i) k = k * q + d.u[i].value;
  for (int i = 0; i < 2; ++i) k = k * q + d.v[i].value;
  return k;
}

std::size_t EnumeratedJacobian::index_of(const MumfordDivisor& d) const {
  if (d.u.degree() <= 2) {
    if (auto it = index_.find(key(d, group_.field().q())); it != index_.end() && elements_[it->second] == d) {
      return it->second;
    }
  }
  throw Error(ErrorCode::InvalidDivisor, "divisor is not in the enumerated group");
}

EnumeratedJacobian enumerate_jacobian(const CurveModel& curve, EnumerateOptions options) {
  Jacobian group(curve);
  const Field& F = group.field();
  const std::uint32_t q = F.q();
  if (q > kJacobianEnumerationLimit) {
    throw Error(ErrorCode::BudgetExceeded, "Jacobian enumeration is limited to q <= " +
                                               std::to_string(kJacobianEnumerationLimit));
  }
  const PolyRing R(F);
  const Poly& h = curve.h;
  const Poly& f = curve.f;
  std::vector<MumfordDivisor> out;
  out.push_back(Jacobian::identity());

  // deg u = 1: u = x - a, v = b with b^2 + h(a) b = f(a).
  for (std::uint32_t av = 0; av < q; ++av) {
    const Elem a{av};
    const Elem ha = R.eval(h, a);
    const Elem fa = R.eval(f, a);
    for (std::uint32_t bv = 0; bv < q; ++bv) {
      const Elem b{bv};
      if (F.add(F.sqr(b), F.mul(ha, b)) == fa) out.push_back({Poly{F.neg(a), Field::one()}, Poly{b}});
    }
  }

  // deg u = 2: u = x^2 + u1 x + u0, v = v1 x + v0. Reduce everything modulo
  // u using x^2 = -u1 x - u0 and test both coefficients of v^2 + h v - f.
  for (std::uint32_t u1v = 0; u1v < q; ++u1v) {
    for (std::uint32_t u0v = 0; u0v < q; ++u0v) {
      const Elem u0{u0v}, u1{u1v};
      const Poly u{u0, u1, Field::one()};
      const Poly hr = R.mod(h, u);
      const Poly fr = R.mod(f, u);
      const Elem hr0 = hr[0], hr1 = hr[1], fr0 = fr[0], fr1 = fr[1];
      for (std::uint32_t v1v = 0; v1v < q; ++v1v) {
        const Elem v1{v1v};
        const Elem v1sq = F.sqr(v1);
        // Terms independent of v0.
        const Elem c_const = F.sub(F.neg(F.mul(v1sq, u0)), F.add(F.mul(F.mul(hr1, v1), u0), fr0));
        const Elem c_x = F.sub(F.sub(F.mul(hr0, v1), F.mul(v1sq, u1)), F.add(F.mul(F.mul(hr1, v1), u1), fr1));
        const Elem two_v1_plus_hr1 = F.add(F.add(v1, v1), hr1);
        for (std::uint32_t v0v = 0; v0v < q; ++v0v) {
          const Elem v0{v0v};
          // const: v0^2 + hr0 v0 + c_const; x: (2 v1 + hr1) v0 + c_x
          if (F.add(F.mul(two_v1_plus_hr1, v0), c_x) != Field::zero()) continue;
          if (F.add(F.add(F.sqr(v0), F.mul(hr0, v0)), c_const) != Field::zero()) continue;
          out.push_back({u, Poly{v0, v1}});
        }
      }
    }
  }

  EnumeratedJacobian jac(std::move(group), std::move(out));
  if (options.verify_order) {
    const auto n1 = static_cast<std::int64_t>(count_points(curve, 1).count);
    const auto n2 = static_cast<std::int64_t>(count_points(curve, 2).count);
    const std::int64_t expected = jacobian_order(weil_from_counts(q, n1, n2));
    if (static_cast<std::int64_t>(jac.order()) != expected) {
      throw Error(ErrorCode::OrderMismatch, "enumerated " + std::to_string(jac.order()) +
                                                " elements but f_A(1) = " + std::to_string(expected));
    }
  }
  return jac;
}

MumfordDivisor embed_point(const CurveModel& curve, const RationalPoint& point) {
  const Jacobian J(curve);
  if (point.infinity) return Jacobian::identity();
  if (point.x.value >= curve.field->q() || point.y.value >= curve.field->q() || !on_curve(curve, point.x, point.y)) {
    throw Error(ErrorCode::PointNotOnCurve, "point does not satisfy the curve equation");
  }
  return MumfordDivisor{Poly{J.field().neg(point.x), Field::one()}, Poly{point.y}};
}

bool theta_membership(const MumfordDivisor& d) noexcept { return d.u.degree() <= 1; }

std::vector<DivisorTuple> find_zero_sum_tuples(const EnumeratedJacobian& jac, unsigned r, std::size_t limit) {
  if (r == 0) throw Error(ErrorCode::InvalidR, "tuple length must be positive");
  const auto& J = jac.group();
  const auto& elems = jac.elements();
  std::vector<DivisorTuple> out;
  if (limit == 0) return out;
  if (r == 1) {
    out.push_back({Jacobian::identity()});
    return out;
  }

  const std::size_t free = r - 1;
  std::vector<std::size_t> idx(free, 0);
  // prefix[i] = P_1 + ... + P_i
  std::vector<MumfordDivisor> prefix(free + 1, Jacobian::identity());
  std::size_t dirty_from = 0;
  while (true) {
    for (std::size_t i = dirty_from; i < free; ++i) prefix[i + 1] = J.add(prefix[i], elems[idx[i]]);
    DivisorTuple t;
    t.reserve(r);
    for (auto i : idx) t.push_back(elems[i]);
    t.push_back(J.neg(prefix[free]));
    out.push_back(std::move(t));
    if (out.size() >= limit) break;

    std::size_t pos = free;
    while (pos > 0) {
      --pos;
      if (++idx[pos] < elems.size()) break;
      idx[pos] = 0;
      if (pos == 0) return out;
    }
    dirty_from = pos;
  }
  return out;
}

TranslateExperiment translate_support_count(const EnumeratedJacobian& jac, const DivisorTuple& tuple) {
  const auto& J = jac.group();
  MumfordDivisor sum = Jacobian::identity();
  for (const auto& p : tuple) sum = J.add(sum, p);
  if (!sum.is_identity()) throw Error(ErrorCode::NonZeroSum, "translate points must sum to zero");

  std::vector<bool> hit(jac.order(), false);
  std::size_t count = 0;
  for (const auto& p : tuple) {
    for (std::size_t t : jac.theta()) {
      const std::size_t i = jac.index_of(J.add(p, jac.elements()[t]));
      if (!hit[i]) {
        hit[i] = true;
        ++count;
      }
    }
  }
  TranslateExperiment out;
  out.points = tuple;
  out.support_count = count;
  out.attained = count == tuple.size() * jac.theta().size();
  out.weight_surrogate = static_cast<std::int64_t>(jac.order()) - static_cast<std::int64_t>(count);
  return out;
}

}  // namespace jacobicode
