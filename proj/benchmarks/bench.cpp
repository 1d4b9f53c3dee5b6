// Copyright 2026 The jacobicode Authors
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include <random>

#include "jacobicode/curve.hpp"
#include "jacobicode/explorer.hpp"
#include "jacobicode/io.hpp"
#include "jacobicode/jacobian.hpp"

using namespace jacobicode;

namespace {

CurveModel curve_over(std::uint32_t q, const char* h, const char* f) {
  const auto F = field_of_order(q);
  return validate_curve(F, parse_poly(h, *F), parse_poly(f, *F));
}

void BM_FieldMul(benchmark::State& state) {
  const auto F = field_of_order(static_cast<std::uint64_t>(state.range(0)));
  std::mt19937 rng(1);
  std::vector<Elem> xs(1024);
  for (auto& x : xs) x = Elem{static_cast<std::uint32_t>(rng() % F->q())};
  Elem acc{1};
  for (auto _ : state) {
    for (const Elem x : xs) acc = F->add(F->mul(acc, x), x);
    benchmark::DoNotOptimize(acc);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(xs.size()));
}
BENCHMARK(BM_FieldMul)->Arg(2)->Arg(16)->Arg(243)->Arg(1 << 16);

void BM_CountPoints(benchmark::State& state) {
  const auto c = curve_over(16, "x^2+x+1", "x^5+x+1");
  const auto k = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(count_points(c, k));
}
BENCHMARK(BM_CountPoints)->Arg(1)->Arg(2)->Arg(4);

void BM_CantorAdd(benchmark::State& state) {
  const auto c = curve_over(static_cast<std::uint32_t>(state.range(0)), "0", "x^5+x+3");
  const auto jac = enumerate_jacobian(c);
  const auto& el = jac.elements();
  const auto& J = jac.group();
  std::size_t i = 1;
  MumfordDivisor acc = el[1];
  for (auto _ : state) {
    acc = J.add(acc, el[i]);
    i = (i * 7 + 3) % el.size();
    benchmark::DoNotOptimize(acc);
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_CantorAdd)->Arg(5)->Arg(7)->Arg(13);

void BM_EnumerateJacobian(benchmark::State& state) {
  const auto c = curve_over(static_cast<std::uint32_t>(state.range(0)), "0", "x^5+x+3");
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_jacobian(c).order());
}
BENCHMARK(BM_EnumerateJacobian)->Arg(5)->Arg(13)->Unit(benchmark::kMillisecond);

void BM_ExhaustiveSearchF3(benchmark::State& state) {
  SearchSpace space;
  space.field = field_of_order(3);
  const std::vector<std::int64_t> r{3};
  for (auto _ : state) benchmark::DoNotOptimize(best_codes(space, r, {1}).rows.size());
}
BENCHMARK(BM_ExhaustiveSearchF3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
