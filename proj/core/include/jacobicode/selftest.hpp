// Copyright 2026 The jacobicode Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace jacobicode {

struct SelftestOptions {
  std::vector<std::uint32_t> fields{2, 3, 4, 5};
  /// Random (a, b, c) triples checked for the group axioms per curve.
  unsigned group_checks = 20;
  std::uint64_t seed = 1;
};

struct SelftestCheck {
  std::string name;
  bool passed = true;
  std::uint64_t cases = 0;
  std::string detail;  // first failure
};

struct SelftestReport {
  std::vector<SelftestCheck> checks;
  bool passed() const noexcept {
    for (const auto& c : checks) {
      if (!c.passed) return false;
    }
    return true;
  }
};

/// Invariant suites of every module over the listed field orders: field
/// axioms, point counts against point lists, Serre bound, Weil roots and
/// extension counts, Jacobian order, group axioms, theta size, and the
/// support-bound oracle.
SelftestReport run_selftest(const SelftestOptions& options = {});

}  // namespace jacobicode
