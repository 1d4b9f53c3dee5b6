// Copyright 2026 The jacobicode Authors
// SPDX-License-Identifier: Apache-2.0

#include "jacobicode/codes.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <mutex>
#include <numeric>

#include "jacobicode/error.hpp"

namespace jacobicode {
namespace {

using boost::multiprecision::cpp_int;

// n = s^2 * t with t squarefree.
std::pair<std::int64_t, std::int64_t> split_square(std::int64_t n) {
  std::int64_t s = 1;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    while (n % (d * d) == 0) {
      n /= d * d;
      s *= d;
    }
  }
  return {s, n};
}

std::int64_t checked_m(std::uint64_t q) {
  if (q < 2) throw Error(ErrorCode::InconsistentCounts, "q must be at least 2");
  return static_cast<std::int64_t>(serre_constant(q));
}

// Largest sum of genera per component count k, over every feasible
// decomposition of radius r with unit multiplicities. Cached per r.
std::map<std::int64_t, std::int64_t> best_genus_sums(std::int64_t r) {
  static std::mutex mutex;
  static std::map<std::int64_t, std::map<std::int64_t, std::int64_t>> cache;
  std::lock_guard lock(mutex);
  if (auto it = cache.find(r); it != cache.end()) return it->second;

  std::map<std::int64_t, std::int64_t> best;
  Decomposition d;
  // Non-decreasing genus sequences; a prefix that fails the budget cannot be
  // extended, nor can its last genus be raised.
  auto recurse = [&](auto& self, std::int64_t min_genus) -> void {
    for (std::int64_t g = min_genus;; ++g) {
      d.components.push_back({1, g});
      const bool ok = genus_budget_check(d, r);
      if (ok) {
        const auto k = static_cast<std::int64_t>(d.components.size());
        std::int64_t sum = 0;
        for (const auto& c : d.components) sum += c.genus;
        auto& slot = best[k];
        slot = std::max(slot, sum);
        if (k < r) self(self, g);
      }
      d.components.pop_back();
      if (!ok) break;
    }
  };
  recurse(recurse, 2);
  cache.emplace(r, best);
  return best;
}

}  // namespace

std::int64_t adjunction_self_intersection(std::int64_t arithmetic_genus) {
  if (arithmetic_genus < 0) throw Error(ErrorCode::BadComponent, "arithmetic genus must be non-negative");
  return 2 * arithmetic_genus - 2;
}

std::int64_t weil_type_point_bound(std::uint64_t q, std::int64_t tau, std::int64_t arithmetic_genus) {
  const auto qq = static_cast<std::int64_t>(q);
  if (tau < -qq) {
    throw Error(ErrorCode::TraceHypothesisViolated,
                "tau = " + std::to_string(tau) + " < -q = " + std::to_string(-qq));
  }
  if (arithmetic_genus < 1) throw Error(ErrorCode::BadComponent, "arithmetic genus must be at least 1");
  return qq + 1 + tau + std::abs(arithmetic_genus - 2) * checked_m(q);
}

bool genus_budget_check(const Decomposition& d, std::int64_t r) {
  // coefficient[t] = sum of n_i * s_i over components with genus_i - 1 = s_i^2 t
  std::map<std::int64_t, cpp_int> coefficient;
  for (const auto& c : d.components) {
    if (c.multiplicity < 1) throw Error(ErrorCode::BadComponent, "multiplicity must be at least 1");
    if (c.genus < 2) throw Error(ErrorCode::BadComponent, "arithmetic genus must be at least 2");
    const auto [s, t] = split_square(c.genus - 1);
    coefficient[t] += cpp_int(c.multiplicity) * s;
  }
  if (r < 0) return false;
  const bool rational = std::all_of(coefficient.begin(), coefficient.end(),
                                    [](const auto& kv) { return kv.first == 1; });
  if (rational) {
    const cpp_int sum = coefficient.empty() ? cpp_int(0) : coefficient.begin()->second;
    return sum <= r;
  }
  // The sum is irrational, so it differs from r; bracket it at scale 2^bits:
  // floor(sqrt(t 4^b)) <= 2^b sqrt(t) <= floor(sqrt(t 4^b)) + 1.
  for (unsigned bits = 8;; bits += 16) {
    const cpp_int scale = cpp_int(1) << bits;
    cpp_int lower = 0, upper = 0;
    for (const auto& [t, coef] : coefficient) {
      const cpp_int root = boost::multiprecision::sqrt(cpp_int(t) * scale * scale);
      lower += coef * root;
      upper += coef * (root * root == cpp_int(t) * scale * scale ? root : root + 1);
    }
    const cpp_int target = cpp_int(r) * scale;
    if (upper <= target) return true;
    if (lower > target) return false;
  }
}

std::int64_t support_bound_closed_form(std::uint64_t q, std::int64_t n1, std::int64_t r) {
  const std::int64_t m = checked_m(q);
  return std::max(n1 + (r * r - 1) * m, r * n1);
}

std::int64_t support_bound_bruteforce(std::uint64_t q, std::int64_t n1, std::int64_t r) {
  if (r < 1) throw Error(ErrorCode::InvalidR, "r must be at least 1");
  if (r > 6) throw Error(ErrorCode::BudgetExceeded, "decomposition search is limited to r <= 6");
  const std::int64_t m = checked_m(q);
  std::int64_t best = std::numeric_limits<std::int64_t>::min();
  for (const auto& [k, genus_sum] : best_genus_sums(r)) {
    best = std::max(best, k * (n1 - 2 * m) + m * genus_sum);
  }
  return best;
}

std::string to_string(Branch b) { return b == Branch::PhiR ? "PhiR" : "Phi1"; }

CodeReport code_params(const WeilData& w, std::int64_t n1, std::int64_t r, CodeParamsOptions options) {
  if (r < 1) throw Error(ErrorCode::InvalidR, "r must be at least 1");
  if (r < 3 && !options.allow_small_r) {
    throw Error(ErrorCode::InvalidR, "r = " + std::to_string(r) + " < 3 needs the small-r override");
  }
  const auto q = static_cast<std::int64_t>(w.q);
  if (n1 != q + 1 + w.c1) {
    throw Error(ErrorCode::InconsistentCounts, "N1 = " + std::to_string(n1) + " but q + 1 + c1 = " +
                                                   std::to_string(q + 1 + w.c1));
  }
  const std::int64_t m = checked_m(w.q);

  CodeReport rep;
  rep.q = w.q;
  rep.r = r;
  rep.n1 = n1;
  rep.n = jacobian_order(w);
  rep.k = r * r;
  const std::int64_t phi_1 = n1 + (r * r - 1) * m;
  const std::int64_t phi_r = r * n1;
  rep.d_lb = rep.n - std::max(phi_1, phi_r);

  const std::int64_t g = std::gcd(n1 - m, m);
  rep.threshold_r = Rational{(n1 - m) / g, m / g};
  const bool below_threshold = (r + 1) * m <= n1;  // r <= N1/m - 1
  rep.branch = below_threshold ? Branch::PhiR : Branch::Phi1;
  // For r = 1 the two extremes coincide and only the threshold decides.
  if (r >= 2 && below_threshold != (phi_1 <= phi_r)) {
    throw Error(ErrorCode::InternalTripwire, "branch threshold disagrees with phi(1) <= phi(r)");
  }

  rep.simplicity = classify_simplicity(w);
  rep.certified = rep.simplicity.verdict == Simplicity::Simple && rep.d_lb > 0;

  if (r < 3) rep.warnings.emplace_back("VeryAmpleNotGuaranteed");
  if (rep.simplicity.verdict == Simplicity::NotSimple) rep.warnings.emplace_back("NotSimple");
  if (rep.simplicity.verdict == Simplicity::Unknown) rep.warnings.emplace_back("SimplicityUnknown");
  if (rep.d_lb <= 0) {
    rep.warnings.emplace_back("NonPositiveBound");
    rep.warnings.emplace_back("DimensionNotCertified");
  }
  return rep;
}

}  // namespace jacobicode
