// Copyright 2026 The jacobicode Authors
// SPDX-License-Identifier: Apache-2.0

#include "jacobicode/selftest.hpp"

#include <random>
#include <sstream>

#include "jacobicode/codes.hpp"
#include "jacobicode/error.hpp"
#include "jacobicode/explorer.hpp"
#include "jacobicode/io.hpp"
#include "jacobicode/jacobian.hpp"

namespace jacobicode {
namespace {

class Recorder {
 public:
  explicit Recorder(std::string name) { check_.name = std::move(name); }

  // Returns ok so callers can stop early on a broken case.
  bool expect(bool ok, const std::string& what) {
    ++check_.cases;
    if (!ok && check_.passed) {
      check_.passed = false;
      check_.detail = what;
    }
    return ok;
  }

  SelftestCheck take() { return std::move(check_); }

 private:
  SelftestCheck check_;
};

std::string describe(const CurveModel& c) {
  return "q=" + std::to_string(c.field->q()) + " h=" + format_poly(c.h) + " f=" + format_poly(c.f);
}

SelftestCheck field_axioms(const Field& F) {
  Recorder rec("gf.axioms q=" + std::to_string(F.q()));
  const std::uint32_t q = F.q();
  for (std::uint32_t x = 0; x < q; ++x) {
    const Elem a{x};
    rec.expect(F.add(a, F.neg(a)) == Field::zero(), "additive inverse");
    if (x != 0) rec.expect(F.mul(a, F.inv(a)) == Field::one(), "multiplicative inverse");
    for (std::uint32_t y = 0; y < q; ++y) {
      const Elem b{y};
      rec.expect(F.add(a, b) == F.add(b, a) && F.mul(a, b) == F.mul(b, a), "commutativity");
      for (std::uint32_t z = 0; z < q; ++z) {
        const Elem c{z};
        rec.expect(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)), "distributivity");
        rec.expect(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)), "associativity");
      }
    }
  }
  // The generator has order exactly q - 1.
  Elem g = F.generator(), acc = Field::one();
  std::uint32_t order = 0;
  do {
    acc = F.mul(acc, g);
    ++order;
  } while (acc != Field::one() && order <= q);
  rec.expect(order == q - 1, "generator order");
  return rec.take();
}

}  // namespace

SelftestReport run_selftest(const SelftestOptions& options) {
  SelftestReport report;
  std::mt19937_64 rng(options.seed);

  for (const std::uint32_t q : options.fields) {
    const FieldPtr F = field_of_order(q);
    report.checks.push_back(field_axioms(*F));

    SearchSpace space;
    space.field = F;
    space.kind = KindFilter::Any;
    Recorder counts("curve.counts q=" + std::to_string(q));
    Recorder serre("curve.serre-bound q=" + std::to_string(q));
    Recorder weil("zeta.weil q=" + std::to_string(q));
    Recorder order("jacobian.order q=" + std::to_string(q));
    Recorder group("jacobian.group-law q=" + std::to_string(q));
    Recorder theta("jacobian.theta q=" + std::to_string(q));
    Recorder bound("codes.point-bound q=" + std::to_string(q));
    const auto m = static_cast<std::int64_t>(serre_constant(q));

    for_each_curve(space, [&](const CurveModel& c) {
      const std::string who = describe(c);
      const auto n1 = static_cast<std::int64_t>(count_points(c, 1).count);
      const auto n2 = static_cast<std::int64_t>(count_points(c, 2).count);
      counts.expect(static_cast<std::int64_t>(curve_points(c, 1).points.size()) == n1, "N1 vs point list, " + who);
      const WeilData w = weil_from_counts(q, n1, n2);
      serre.expect(std::abs(w.c1) <= 2 * m, "Serre bound, " + who);
      weil.expect(roots_on_weil_circle(w), "roots off the circle, " + who);
      weil.expect(extension_counts(w, 3) == WideInt(count_points(c, 3).count), "N3 mismatch, " + who);
      const auto tau = n1 - static_cast<std::int64_t>(q) - 1;
      // tau < -q (no rational points) is outside the bound's hypothesis.
      if (tau >= -static_cast<std::int64_t>(q)) {
        bound.expect(weil_type_point_bound(q, tau, 2) == n1, "pi = 2 bound, " + who);
      }
      if (!c.imaginary()) return;

      const EnumeratedJacobian jac = enumerate_jacobian(c, {false});
      const auto n = static_cast<std::int64_t>(jac.order());
      order.expect(n == jacobian_order(w) && n == (n2 + n1 * n1) / 2 - static_cast<std::int64_t>(q),
                   "order, " + who);
      theta.expect(static_cast<std::int64_t>(jac.theta().size()) == n1, "theta size, " + who);

      const auto& J = jac.group();
      const auto& el = jac.elements();
      std::uniform_int_distribution<std::size_t> pick(0, el.size() - 1);
      for (unsigned i = 0; i < options.group_checks; ++i) {
        const auto& a = el[pick(rng)];
        const auto& b = el[pick(rng)];
        const auto& d = el[pick(rng)];
        if (!group.expect(J.add(J.add(a, b), d) == J.add(a, J.add(b, d)), "associativity, " + who)) break;
        group.expect(J.add(a, b) == J.add(b, a), "commutativity, " + who);
        group.expect(J.add(a, J.neg(a)).is_identity(), "inverse, " + who);
        group.expect(J.add(a, Jacobian::identity()) == a, "identity, " + who);
      }
      for (const auto& d : el) {
        if (!group.expect(J.scalar_mul(n, d).is_identity(), "n*D != 0, " + who)) break;
      }
    });
    for (auto* r : {&counts, &serre, &weil, &order, &group, &theta, &bound}) report.checks.push_back(r->take());
  }

  Recorder oracle("codes.support-bound");
  for (const std::uint64_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 16u}) {
    const auto m = static_cast<std::int64_t>(serre_constant(q));
    const auto qq = static_cast<std::int64_t>(q);
    for (std::int64_t n1 = std::max<std::int64_t>(0, qq + 1 - 2 * m); n1 <= qq + 1 + 2 * m; ++n1) {
      for (std::int64_t r = 1; r <= 5; ++r) {
        std::ostringstream who;
        who << "q=" << q << " N1=" << n1 << " r=" << r;
        oracle.expect(support_bound_bruteforce(q, n1, r) == support_bound_closed_form(q, n1, r), who.str());
      }
    }
  }
  report.checks.push_back(oracle.take());
  return report;
}

}  // namespace jacobicode
