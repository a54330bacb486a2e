// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include "octa/error.hpp"
#include "octa/field.hpp"

using namespace octa;

namespace {

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::BadInput;
}

}  // namespace

TEST(Field, F5DefaultsAndFourthRoot) {
  const Field f = Field::create(5, 1);
  EXPECT_EQ(f.q(), 5u);
  EXPECT_EQ(f.omega(), f.from_int(2));
  ASSERT_TRUE(f.fourth_root());
  EXPECT_EQ(f.i(), f.from_int(2));
  EXPECT_EQ(f.inv(f.from_int(2)), f.from_int(3));
}

TEST(Field, F13FourthRoot) {
  const Field f = Field::create(13, 1);
  EXPECT_EQ(f.omega(), f.from_int(2));
  EXPECT_EQ(f.i(), f.from_int(8));
  EXPECT_EQ(f.mul(f.i(), f.i()), f.from_int(12));
  EXPECT_EQ(f.pow(f.from_int(2), 12), f.one());
}

TEST(Field, F7HasNoFourthRoot) {
  const Field f = Field::create(7, 1);
  EXPECT_FALSE(f.fourth_root());
  EXPECT_EQ(kind_of([&] { f.i(); }), ErrorKind::MissingFourthRoot);
}

TEST(Field, F9SquareOfX) {
  const Field f = Field::create(3, 2);
  EXPECT_EQ(f.modulus(), (std::vector<std::uint32_t>{1, 0, 1}));
  const std::vector<std::uint32_t> x_coeffs{0, 1};
  const Element x = f.from_coeffs(x_coeffs);
  EXPECT_EQ(f.mul(x, x), f.from_int(2));
}

TEST(Field, Char5Identity) {
  EXPECT_TRUE(Field::create(5, 2).is_char5_identity());
  EXPECT_TRUE(Field::create(5, 1).is_char5_identity());
  EXPECT_FALSE(Field::create(13, 1).is_char5_identity());
  EXPECT_FALSE(Field::create(3, 2).is_char5_identity());
  const Field f = Field::create(13, 1);
  EXPECT_EQ(f.add(f.one(), f.i()), f.from_int(9));
  EXPECT_EQ(f.neg(f.i()), f.from_int(5));
}

TEST(Field, AxiomsExhaustiveSmall) {
  for (auto [p, a] : {std::pair{3u, 2u}, {5u, 2u}, {13u, 1u}, {7u, 2u}}) {
    const Field f = Field::create(p, a);
    for (std::uint32_t x = 0; x < f.q(); ++x) {
      for (std::uint32_t y = 0; y < f.q(); ++y) {
        const Element ex{x}, ey{y};
        EXPECT_EQ(f.add(ex, ey), f.add(ey, ex));
        EXPECT_EQ(f.mul(ex, ey), f.mul(ey, ex));
        EXPECT_EQ(f.sub(f.add(ex, ey), ey), ex);
        if (y) EXPECT_EQ(f.mul(f.div(ex, ey), ey), ex);
      }
    }
    EXPECT_EQ(f.order(f.omega()), f.q() - 1);
  }
}

TEST(Field, GeneratorIsLexSmallest) {
  const Field f = Field::create(3, 2);
  for (std::uint32_t c = 1; c < f.omega().code; ++c) EXPECT_LT(f.order(Element{c}), f.q() - 1);
}

TEST(Field, Overrides) {
  // x^2 + x + 2 is irreducible over F_3
  const Field f = Field::create(3, 2, std::vector<std::uint32_t>{2, 1, 1});
  EXPECT_EQ(f.modulus(), (std::vector<std::uint32_t>{2, 1, 1}));
  EXPECT_EQ(f.order(f.omega()), 8u);
  const Field g = Field::create(13, 1, std::nullopt, std::vector<std::uint32_t>{6});
  EXPECT_EQ(g.omega(), g.from_int(6));
}

TEST(Field, Errors) {
  EXPECT_EQ(kind_of([] { Field::create(9, 1); }), ErrorKind::NotPrime);
  EXPECT_EQ(kind_of([] { Field::create(3, 2, std::vector<std::uint32_t>{2, 0, 1}); }), ErrorKind::ReducibleModulus);
  EXPECT_EQ(kind_of([] { Field::create(3, 2, std::vector<std::uint32_t>{1, 1}); }), ErrorKind::WrongDegree);
  EXPECT_EQ(kind_of([] { Field::create(13, 1, std::nullopt, std::vector<std::uint32_t>{3}); }), ErrorKind::BadInput);
  const Field f = Field::create(5, 1);
  EXPECT_EQ(kind_of([&] { f.inv(f.zero()); }), ErrorKind::DivisionByZero);
}

TEST(Field, ParseSpec) {
  const FieldSpec s = parse_field_spec("3 2 1 0 1");
  EXPECT_EQ(s.p, 3u);
  EXPECT_EQ(s.alpha, 2u);
  EXPECT_EQ(s.modulus, (std::vector<std::uint32_t>{1, 0, 1}));
  EXPECT_EQ(kind_of([] { parse_field_spec("3 2 1 0"); }), ErrorKind::WrongDegree);
  EXPECT_EQ(kind_of([] { parse_field_spec("x"); }), ErrorKind::BadInput);
}

TEST(Field, PrimePowers) {
  EXPECT_EQ(prime_power(81), (std::pair<std::uint32_t, std::uint32_t>{3, 4}));
  EXPECT_EQ(prime_power(125), (std::pair<std::uint32_t, std::uint32_t>{5, 3}));
  EXPECT_FALSE(prime_power(45));
  EXPECT_FALSE(prime_power(1));
}
