// Copyright 2026 The jacobicode Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "jacobicode/codes.hpp"
#include "jacobicode/curve.hpp"
#include "jacobicode/zeta.hpp"

namespace jacobicode {

enum class KindFilter { Imaginary, Real, Any };
enum class SearchMode { Exhaustive, Random };

std::string to_string(KindFilter k);
std::string to_string(SearchMode m);

/// Exhaustive spaces above this many coefficient tuples are refused.
inline constexpr std::uint64_t kExhaustiveLimit = 10'000'000;

/// Candidate curves: monic f of degree 5 (imaginary) or 6 (real), and in
/// characteristic 2 an h of degree <= h_max_degree. Odd characteristic uses
/// h = 0, since every model can be brought to that form.
struct SearchSpace {
  FieldPtr field;
  KindFilter kind = KindFilter::Imaginary;
  int h_max_degree = -1;  // -1: 2 for imaginary, 3 for real
  SearchMode mode = SearchMode::Exhaustive;
  std::uint64_t seed = 0;
  std::uint64_t trials = 0;
};

/// Number of coefficient tuples an exhaustive walk visits.
std::uint64_t space_size(const SearchSpace& space);

/// Visits every validated model, in lexicographic order of the tuple
/// (kind, h_0.., f_0..) in exhaustive mode and in trial order in random mode.
/// Throws SpaceTooLarge.
void for_each_curve(const SearchSpace& space, const std::function<void(const CurveModel&)>& visit);
std::vector<CurveModel> enumerate_curves(const SearchSpace& space);

/// Tie-break key: kind, then h and f coefficient encodings padded to fixed
/// width.
std::vector<std::uint32_t> curve_key(const CurveModel& curve);

struct CodeRow {
  CurveModel curve;
  std::int64_t n2 = 0;
  WeilData weil;
  CodeReport report;
  std::vector<std::uint32_t> key;
};

/// Canonical table order: certified first, then larger d_lb, larger n,
/// smaller key, smaller r.
bool row_before(const CodeRow& a, const CodeRow& b);

/// count -> weil -> classify -> code_params, one row per r.
std::vector<CodeRow> evaluate_curve(const CurveModel& curve, std::span<const std::int64_t> r_values,
                                    CodeParamsOptions options = {true});

struct BestCodesOptions {
  unsigned threads = 0;  // 0: default_parallelism()
  std::size_t keep = std::numeric_limits<std::size_t>::max();
  CodeParamsOptions params{true};
};

struct BestCodesResult {
  std::vector<CodeRow> rows;
  std::uint64_t candidates = 0;    // tuples visited
  std::uint64_t valid_curves = 0;  // tuples passing validation
  std::int64_t max_n1 = -1;
  std::optional<CurveModel> max_n1_curve;  // smallest key among the maxima
};

BestCodesResult best_codes(const SearchSpace& space, std::span<const std::int64_t> r_values,
                           BestCodesOptions options = {});

/// JACOBICODE_THREADS if set and positive, else the hardware concurrency.
unsigned default_parallelism();

}  // namespace jacobicode
