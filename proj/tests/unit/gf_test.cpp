// Copyright 2026 The jacobicode Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <set>
#include <thread>

#include "jacobicode/error.hpp"
#include "jacobicode/gf.hpp"
#include "support/oracles.hpp"

using namespace jacobicode;

namespace {

const std::vector<std::uint32_t> kSmallOrders{2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 32, 49, 64};

TEST(FieldConstruction, PrimeFieldNeedsNoModulus) {
  auto F = make_field(2, 1);
  EXPECT_EQ(F->q(), 2u);
  EXPECT_EQ(F->modulus(), (std::vector<std::uint32_t>{0, 1}));
}

TEST(FieldConstruction, F4WithExplicitModulus) {
  auto F = make_field(2, 2, std::vector<std::uint32_t>{1, 1, 1});
  EXPECT_EQ(F->q(), 4u);
  EXPECT_EQ(F->p(), 2u);
  EXPECT_EQ(F->a(), 2u);
}

TEST(FieldConstruction, Errors) {
  auto code = [](auto fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::InternalTripwire;
  };
  EXPECT_EQ(code([] { make_field(2, 2, std::vector<std::uint32_t>{1, 0, 1}); }), ErrorCode::ReducibleModulus);
  EXPECT_EQ(code([] { make_field(4, 1); }), ErrorCode::NotPrime);
  EXPECT_EQ(code([] { make_field(2, 17); }), ErrorCode::FieldTooLarge);
  EXPECT_EQ(code([] { field_of_order(6); }), ErrorCode::NotPrime);
  EXPECT_EQ(code([] { make_field(2, 2, std::vector<std::uint32_t>{1, 1, 2}); }), ErrorCode::ParseError);
  EXPECT_EQ(code([] { make_field(3, 2, std::vector<std::uint32_t>{1, 1}); }), ErrorCode::ParseError);
  EXPECT_NO_THROW(make_field(2, 17, std::nullopt, FieldOptions{true}));
}

TEST(FieldConstruction, DefaultModulusIsIrreducibleAndCached) {
  for (const auto q : kSmallOrders) {
    auto F = field_of_order(q);
    EXPECT_TRUE(is_irreducible_mod_p(F->modulus(), F->p())) << q;
    EXPECT_EQ(F.get(), field_of_order(q).get());
  }
  EXPECT_EQ(default_modulus(2, 2), (std::vector<std::uint32_t>{1, 1, 1}));
  EXPECT_EQ(default_modulus(3, 1), (std::vector<std::uint32_t>{0, 1}));
}

TEST(FieldArithmetic, F4Examples) {
  auto F = make_field(2, 2, std::vector<std::uint32_t>{1, 1, 1});
  const Elem w{2}, w1{3};
  EXPECT_EQ(F->mul(w, w), w1);  // w^2 = w + 1
  EXPECT_EQ(F->inv(w), w1);
  EXPECT_EQ(F->inv(Field::one()), Field::one());
  EXPECT_THROW(F->inv(Field::zero()), Error);
  for (std::uint32_t x = 0; x < 4; ++x) {
    EXPECT_EQ(F->mul(Field::one(), Elem{x}), Elem{x});
    EXPECT_EQ(F->mul(Field::zero(), Elem{x}), Field::zero());
  }
}

TEST(FieldArithmetic, EncodingRoundTrip) {
  auto F = field_of_order(27);
  for (std::uint32_t x = 0; x < 27; ++x) {
    EXPECT_EQ(F->from_coeffs(F->coeffs(Elem{x})), Elem{x});
    EXPECT_EQ(F->coeffs(Elem{x}), oracle::digits(*F, Elem{x}));
  }
  EXPECT_THROW(F->from_encoding(27), Error);
  EXPECT_EQ(F->from_int(-1), F->neg(Field::one()));
}

class FieldProperties : public ::testing::TestWithParam<std::uint32_t> {};

TEST_P(FieldProperties, MatchesSchoolbookArithmetic) {
  auto F = field_of_order(GetParam());
  for (std::uint32_t x = 0; x < F->q(); ++x) {
    for (std::uint32_t y = 0; y < F->q(); ++y) {
      ASSERT_EQ(F->mul(Elem{x}, Elem{y}), oracle::mul(*F, Elem{x}, Elem{y})) << x << "*" << y;
      ASSERT_EQ(F->add(Elem{x}, Elem{y}), oracle::add(*F, Elem{x}, Elem{y})) << x << "+" << y;
    }
  }
}

TEST_P(FieldProperties, Axioms) {
  auto F = field_of_order(GetParam());
  const std::uint32_t q = F->q();
  for (std::uint32_t x = 0; x < q; ++x) {
    const Elem a{x};
    ASSERT_EQ(F->add(a, F->neg(a)), Field::zero());
    ASSERT_EQ(F->sub(a, a), Field::zero());
    if (x != 0) {
      ASSERT_EQ(F->mul(a, F->inv(a)), Field::one());
      ASSERT_EQ(F->div(a, a), Field::one());
    }
    for (std::uint32_t y = 0; y < q; ++y) {
      const Elem b{y};
      for (std::uint32_t z = 0; z < q; z += (q > 16 ? 7 : 1)) {
        const Elem c{z};
        ASSERT_EQ(F->mul(F->mul(a, b), c), F->mul(a, F->mul(b, c)));
        ASSERT_EQ(F->add(F->add(a, b), c), F->add(a, F->add(b, c)));
        ASSERT_EQ(F->mul(a, F->add(b, c)), F->add(F->mul(a, b), F->mul(a, c)));
      }
    }
  }
}

TEST_P(FieldProperties, MultiplicativeGroupIsCyclic) {
  auto F = field_of_order(GetParam());
  const std::uint32_t q = F->q();
  bool found = false;
  for (std::uint32_t x = 1; x < q && !found; ++x) {
    Elem acc = Elem{x};
    std::uint32_t order = 1;
    while (acc != Field::one()) {
      acc = oracle::mul(*F, acc, Elem{x});
      ++order;
    }
    found = order == q - 1;
  }
  EXPECT_TRUE(found);
  std::set<std::uint32_t> powers;
  for (std::uint32_t e = 0; e < q - 1; ++e) powers.insert(F->pow(F->generator(), e).value);
  EXPECT_EQ(powers.size(), q - 1);
}

TEST_P(FieldProperties, SquaresAndTraces) {
  auto F = field_of_order(GetParam());
  std::set<std::uint32_t> squares;
  for (std::uint32_t x = 0; x < F->q(); ++x) squares.insert(F->sqr(Elem{x}).value);
  for (std::uint32_t x = 0; x < F->q(); ++x) {
    const Elem a{x};
    EXPECT_EQ(F->is_square(a), squares.count(x) == 1);
    if (auto r = F->sqrt(a)) EXPECT_EQ(F->sqr(*r), a);
  }
  if (F->p() == 2) {
    for (std::uint32_t c = 0; c < F->q(); ++c) {
      bool solvable = false;
      for (std::uint32_t z = 0; z < F->q(); ++z) solvable |= F->add(F->sqr(Elem{z}), Elem{z}) == Elem{c};
      const auto z = F->solve_artin_schreier(Elem{c});
      EXPECT_EQ(z.has_value(), solvable);
      EXPECT_EQ(F->absolute_trace(Elem{c}) == 0, solvable);
      if (z) EXPECT_EQ(F->add(F->sqr(*z), *z), Elem{c});
    }
  } else {
    EXPECT_THROW(F->solve_artin_schreier(Field::one()), Error);
  }
}

TEST_P(FieldProperties, QuadraticLiftIsAHomomorphism) {
  auto F = field_of_order(GetParam());
  if (F->q() > 64) GTEST_SKIP();
  auto ext = lift_quadratic(F);
  const Field& E = *ext->ext;
  EXPECT_EQ(E.q(), F->q() * F->q());
  EXPECT_EQ(ext->embed(Field::zero()), Field::zero());
  EXPECT_EQ(ext->embed(Field::one()), Field::one());
  for (std::uint32_t x = 0; x < F->q(); ++x) {
    for (std::uint32_t y = 0; y < F->q(); ++y) {
      const Elem a{x}, b{y};
      ASSERT_EQ(ext->embed(F->add(a, b)), E.add(ext->embed(a), ext->embed(b)));
      ASSERT_EQ(ext->embed(F->mul(a, b)), E.mul(ext->embed(a), ext->embed(b)));
    }
  }
}

INSTANTIATE_TEST_SUITE_P(SmallFields, FieldProperties, ::testing::ValuesIn(kSmallOrders));

TEST(FieldExtension, F4IntoF16PreservesOrder) {
  auto F4 = field_of_order(4);
  auto ext = lift_quadratic(F4);
  const Field& E = *ext->ext;
  const Elem w = ext->embed(Elem{2});
  Elem acc = w;
  int order = 1;
  while (acc != Field::one()) {
    acc = E.mul(acc, w);
    ++order;
  }
  EXPECT_EQ(order, 3);
}

TEST(FieldExtension, F3IntoF9) {
  auto ext = lift_quadratic(field_of_order(3));
  const Field& E = *ext->ext;
  EXPECT_EQ(E.sqr(ext->embed(Elem{2})), ext->embed(Elem{1}));
  EXPECT_EQ(ext->embed(Elem{2}), E.neg(Field::one()));
}

TEST(FieldExtension, TooLarge) {
  EXPECT_THROW(extend_field(field_of_order(64), 4), Error);
  EXPECT_EQ(extend_field(field_of_order(2), 3)->ext->q(), 8u);
}

TEST(FieldElement, CheckedWrapper) {
  auto F = field_of_order(4);
  auto G = make_field(2, 2, std::vector<std::uint32_t>{1, 1, 1});
  const FieldElement w = FieldElement::from_encoding(F, 2);
  EXPECT_EQ((w * w).encoding(), 3u);
  EXPECT_EQ(w.inverse().encoding(), 3u);
  EXPECT_EQ((w + w).encoding(), 0u);
  EXPECT_EQ((w / w).encoding(), 1u);
  EXPECT_TRUE((w - w).is_zero());
  EXPECT_EQ(-w, w);
  // Same order and modulus: compatible.
  EXPECT_NO_THROW(w * FieldElement::from_encoding(G, 1));
  auto F8 = field_of_order(8);
  EXPECT_THROW(w * FieldElement::from_encoding(F8, 1), Error);
  EXPECT_THROW(FieldElement::from_encoding(F, 0).inverse(), Error);
}

TEST(FieldConcurrency, ParallelConstructionSharesOneInstance) {
  std::vector<FieldPtr> got(8);
  std::vector<std::thread> pool;
  for (int i = 0; i < 8; ++i) pool.emplace_back([&, i] { got[i] = field_of_order(81); });
  for (auto& t : pool) t.join();
  for (const auto& f : got) EXPECT_EQ(f.get(), got[0].get());
}

}  // namespace
