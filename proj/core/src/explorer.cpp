// Copyright 2026 The jacobicode Authors
// SPDX-License-Identifier: Apache-2.0

#include "jacobicode/explorer.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <random>
#include <thread>

#include "jacobicode/error.hpp"

namespace jacobicode {
namespace {

constexpr std::size_t kKeyH = 4;
constexpr std::size_t kKeyF = 7;

struct Block {
  ModelKind kind;
  unsigned h_coeffs;
  unsigned f_coeffs;  // below the monic leading term
  std::uint64_t size;
};

std::uint64_t saturating_pow(std::uint64_t base, unsigned e) {
  std::uint64_t out = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (out > std::numeric_limits<std::uint64_t>::max() / base) return std::numeric_limits<std::uint64_t>::max();
    out *= base;
  }
  return out;
}

std::vector<Block> blocks_of(const SearchSpace& space) {
  if (!space.field) throw Error(ErrorCode::Usage, "search space needs a field");
  const bool even = space.field->p() == 2;
  std::vector<Block> out;
  auto add = [&](ModelKind kind) {
    const int cap = kind == ModelKind::Imaginary ? 2 : 3;
    int hdeg = space.h_max_degree < 0 ? cap : std::min(space.h_max_degree, cap);
    const unsigned hc = even ? static_cast<unsigned>(hdeg + 1) : 0;
    const unsigned fc = kind == ModelKind::Imaginary ? 5 : 6;
    out.push_back({kind, hc, fc, saturating_pow(space.field->q(), hc + fc)});
  };
  if (space.kind != KindFilter::Real) add(ModelKind::Imaginary);
  if (space.kind != KindFilter::Imaginary) add(ModelKind::Real);
  return out;
}

// Builds (h, f) from digits, h_0 first, and validates. Returns nullopt for
// tuples that do not define a genus-2 model.
std::optional<CurveModel> make_candidate(const FieldPtr& field, const Block& b, const std::vector<std::uint32_t>& digits) {
  Poly::Storage hs, fs;
  for (unsigned i = 0; i < b.h_coeffs; ++i) hs.push_back(Elem{digits[i]});
  for (unsigned i = 0; i < b.f_coeffs; ++i) fs.push_back(Elem{digits[b.h_coeffs + i]});
  fs.push_back(Field::one());
  try {
    return validate_curve(field, Poly(std::move(hs)), Poly(std::move(fs)));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::SingularModel || e.code() == ErrorCode::GenusNotTwo) return std::nullopt;
    throw;
  }
}

struct Cursor {
  const SearchSpace& space;
  std::vector<Block> blocks;

  // Exhaustive index -> candidate.
  std::optional<CurveModel> at(std::uint64_t index, std::vector<std::uint32_t>& digits) const {
    const std::uint32_t q = space.field->q();
    for (const auto& b : blocks) {
      if (index >= b.size) {
        index -= b.size;
        continue;
      }
      const unsigned len = b.h_coeffs + b.f_coeffs;
      digits.assign(len, 0);
      for (unsigned i = len; i-- > 0;) {
        digits[i] = static_cast<std::uint32_t>(index % q);
        index /= q;
      }
      return make_candidate(space.field, b, digits);
    }
    throw Error(ErrorCode::InternalTripwire, "search index out of range");
  }

  // Random trial -> candidate; the draw depends only on (seed, trial).
  std::optional<CurveModel> trial(std::uint64_t t, std::vector<std::uint32_t>& digits) const {
    std::seed_seq seq{static_cast<std::uint32_t>(space.seed), static_cast<std::uint32_t>(space.seed >> 32),
                      static_cast<std::uint32_t>(t), static_cast<std::uint32_t>(t >> 32)};
    std::mt19937_64 rng(seq);
    const Block& b = blocks.size() == 1 ? blocks[0] : blocks[rng() & 1];
    const std::uint64_t q = space.field->q();
    digits.assign(b.h_coeffs + b.f_coeffs, 0);
    for (auto& d : digits) d = static_cast<std::uint32_t>(rng() % q);
    return make_candidate(space.field, b, digits);
  }

  std::uint64_t total() const {
    if (space.mode == SearchMode::Random) return space.trials;
    std::uint64_t n = 0;
    for (const auto& b : blocks) n = std::min(n + b.size, std::numeric_limits<std::uint64_t>::max() / 2);
    return n;
  }

  std::optional<CurveModel> get(std::uint64_t i, std::vector<std::uint32_t>& digits) const {
    return space.mode == SearchMode::Random ? trial(i, digits) : at(i, digits);
  }
};

Cursor make_cursor(const SearchSpace& space) {
  Cursor c{space, blocks_of(space)};
  if (space.mode == SearchMode::Exhaustive && c.total() > kExhaustiveLimit) {
    throw Error(ErrorCode::SpaceTooLarge, "exhaustive space has " + std::to_string(c.total()) + " tuples, limit " +
                                              std::to_string(kExhaustiveLimit));
  }
  return c;
}

struct Partial {
  std::vector<CodeRow> rows;
  std::uint64_t candidates = 0;
  std::uint64_t valid = 0;
  std::int64_t max_n1 = -1;
  std::optional<CurveModel> max_curve;
  std::vector<std::uint32_t> max_key;
};

bool same_entry(const CodeRow& a, const CodeRow& b) { return a.key == b.key && a.report.r == b.report.r; }

// Sorted, one row per (tuple, r), at most keep rows. Random draws can repeat
// a tuple.
void trim(std::vector<CodeRow>& rows, std::size_t keep) {
  std::sort(rows.begin(), rows.end(), row_before);
  rows.erase(std::unique(rows.begin(), rows.end(), same_entry), rows.end());
  if (rows.size() > keep) rows.resize(keep);
}

void note_max(Partial& p, std::int64_t n1, const CurveModel& curve, std::vector<std::uint32_t> key) {
  if (n1 > p.max_n1 || (n1 == p.max_n1 && key < p.max_key)) {
    p.max_n1 = n1;
    p.max_curve = curve;
    p.max_key = std::move(key);
  }
}

}  // namespace

std::string to_string(KindFilter k) {
  switch (k) {
    case KindFilter::Imaginary: return "imaginary";
    case KindFilter::Real: return "real";
    case KindFilter::Any: return "any";
  }
  return "?";
}

std::string to_string(SearchMode m) { return m == SearchMode::Random ? "random" : "exhaustive"; }

std::uint64_t space_size(const SearchSpace& space) {
  std::uint64_t n = 0;
  for (const auto& b : blocks_of(space)) n = std::min(n + b.size, std::numeric_limits<std::uint64_t>::max() / 2);
  return n;
}

void for_each_curve(const SearchSpace& space, const std::function<void(const CurveModel&)>& visit) {
  const Cursor cursor = make_cursor(space);
  std::vector<std::uint32_t> digits;
  const std::uint64_t n = cursor.total();
  for (std::uint64_t i = 0; i < n; ++i) {
    if (auto c = cursor.get(i, digits)) visit(*c);
  }
}

std::vector<CurveModel> enumerate_curves(const SearchSpace& space) {
  std::vector<CurveModel> out;
  for_each_curve(space, [&](const CurveModel& c) { out.push_back(c); });
  if (space.mode == SearchMode::Random) {
    // Repeated draws collapse to one entry per exact tuple.
    std::vector<std::pair<std::vector<std::uint32_t>, std::size_t>> keyed;
    keyed.reserve(out.size());
    for (std::size_t i = 0; i < out.size(); ++i) keyed.emplace_back(curve_key(out[i]), i);
    std::stable_sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<bool> drop(out.size(), false);
    for (std::size_t i = 1; i < keyed.size(); ++i) {
      if (keyed[i].first == keyed[i - 1].first) drop[keyed[i].second] = true;
    }
    std::vector<CurveModel> unique;
    for (std::size_t i = 0; i < out.size(); ++i) {
      if (!drop[i]) unique.push_back(std::move(out[i]));
    }
    out = std::move(unique);
  }
  return out;
}

std::vector<std::uint32_t> curve_key(const CurveModel& curve) {
  std::vector<std::uint32_t> key(1 + kKeyH + kKeyF, 0);
  key[0] = curve.imaginary() ? 0 : 1;
  for (int i = 0; i <= curve.h.degree() && i < static_cast<int>(kKeyH); ++i) key[1 + i] = curve.h[i].value;
  for (int i = 0; i <= curve.f.degree() && i < static_cast<int>(kKeyF); ++i) key[1 + kKeyH + i] = curve.f[i].value;
  return key;
}

bool row_before(const CodeRow& a, const CodeRow& b) {
  if (a.report.certified != b.report.certified) return a.report.certified;
  if (a.report.d_lb != b.report.d_lb) return a.report.d_lb > b.report.d_lb;
  if (a.report.n != b.report.n) return a.report.n > b.report.n;
  if (a.key != b.key) return a.key < b.key;
  return a.report.r < b.report.r;
}

std::vector<CodeRow> evaluate_curve(const CurveModel& curve, std::span<const std::int64_t> r_values,
                                    CodeParamsOptions options) {
  std::vector<CodeRow> out;
  if (r_values.empty()) return out;
  const auto n1 = static_cast<std::int64_t>(count_points(curve, 1).count);
  const auto n2 = static_cast<std::int64_t>(count_points(curve, 2).count);
  const WeilData w = weil_from_counts(curve.field->q(), n1, n2);
  auto key = curve_key(curve);
  for (const std::int64_t r : r_values) {
    out.push_back(CodeRow{curve, n2, w, code_params(w, n1, r, options), key});
  }
  return out;
}

unsigned default_parallelism() {
  if (const char* env = std::getenv("JACOBICODE_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(std::min(v, 256L));
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

BestCodesResult best_codes(const SearchSpace& space, std::span<const std::int64_t> r_values, BestCodesOptions options) {
  for (const auto r : r_values) {
    if (r < 1 || r > 6) throw Error(ErrorCode::InvalidR, "r must lie in [1, 6], got " + std::to_string(r));
  }
  const Cursor cursor = make_cursor(space);
  const std::uint64_t total = cursor.total();
  const unsigned threads = std::max<unsigned>(1, options.threads == 0 ? default_parallelism() : options.threads);
  const std::uint64_t workers = std::min<std::uint64_t>(threads, std::max<std::uint64_t>(1, total));

  std::vector<Partial> parts(workers);
  std::vector<std::exception_ptr> failures(workers);
  const std::size_t slack = options.keep == std::numeric_limits<std::size_t>::max() ? options.keep : 2 * options.keep + 256;

  auto work = [&](std::uint64_t w) {
    try {
      Partial& p = parts[w];
      std::vector<std::uint32_t> digits;
      const std::uint64_t begin = total * w / workers;
      const std::uint64_t end = total * (w + 1) / workers;
      for (std::uint64_t i = begin; i < end; ++i) {
        ++p.candidates;
        auto curve = cursor.get(i, digits);
        if (!curve) continue;
        ++p.valid;
        const auto n1 = static_cast<std::int64_t>(count_points(*curve, 1).count);
        note_max(p, n1, *curve, curve_key(*curve));
        auto rows = evaluate_curve(*curve, r_values, options.params);
        for (auto& row : rows) p.rows.push_back(std::move(row));
        if (p.rows.size() > slack) trim(p.rows, options.keep);
      }
    } catch (...) {
      failures[w] = std::current_exception();
    }
  };

  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::uint64_t w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  for (const auto& f : failures) {
    if (f) std::rethrow_exception(f);
  }

  BestCodesResult out;
  Partial merged;
  for (auto& p : parts) {
    out.candidates += p.candidates;
    out.valid_curves += p.valid;
    if (p.max_curve) note_max(merged, p.max_n1, *p.max_curve, p.max_key);
    for (auto& row : p.rows) out.rows.push_back(std::move(row));
  }
  out.max_n1 = merged.max_n1;
  out.max_n1_curve = std::move(merged.max_curve);

  trim(out.rows, options.keep);
  return out;
}

}  // namespace jacobicode
