// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include "octa/counting.hpp"
#include "octa/error.hpp"

using namespace octa;

TEST(Counting, HFactorExamples) {
  EXPECT_EQ(h_factor(3, 2, 2), Rational(1, 4));
  EXPECT_EQ(h_factor(5, 2, 1), Rational(2));
  EXPECT_EQ(h_factor(13, 2, 2), Rational(1));
  EXPECT_EQ(h_factor(3, 4, 1), Rational(1));
  EXPECT_EQ(h_factor(3, 4, 2), Rational(1, 2));
  EXPECT_EQ(h_factor(5, 4, 1), Rational(4));
}

// The p = 3 (mod 4) branch, tabulated by hand for n <= 8.
TEST(Counting, HFactorTableP3) {
  const std::map<std::pair<int, int>, Rational> expected = {
      {{2, 1}, Rational(1)},    {{2, 2}, Rational(1, 4)}, {{4, 1}, Rational(1)}, {{4, 2}, Rational(1, 2)},
      {{4, 4}, Rational(1, 4)}, {{6, 1}, Rational(1)},    {{6, 2}, Rational(1, 4)}, {{6, 3}, Rational(1)},
      {{6, 6}, Rational(1, 4)}, {{8, 1}, Rational(1)},    {{8, 2}, Rational(1)},    {{8, 4}, Rational(1, 2)},
      {{8, 8}, Rational(1, 4)},
  };
  for (const auto& [nd, h] : expected) EXPECT_EQ(h_factor(7, nd.first, nd.second), h) << nd.first << "/" << nd.second;
}

TEST(Counting, HFactorErrors) {
  EXPECT_THROW(h_factor(3, 4, 3), Error);
  EXPECT_THROW(h_factor(3, 3, 1), Error);
  EXPECT_THROW(h_factor(4, 2, 1), Error);
}

TEST(Counting, OrbitCountExamples) {
  EXPECT_EQ(orbit_count_pf(3, 2).count, 2u);
  EXPECT_EQ(orbit_count_pf(3, 2).m_min, 3u);
  EXPECT_EQ(orbit_count_pf(5, 2).m_min, 7u);
  EXPECT_EQ(orbit_count_pf(13, 2).count, 24u);
  EXPECT_EQ(orbit_count_pf(13, 2).m_min, 47u);
  EXPECT_EQ(orbit_count_pf(3, 4).count, 7u);
  EXPECT_EQ(orbit_count_pf(3, 4).m_min, 13u);
  EXPECT_EQ(orbit_count_pf(7, 2).m_min, 17u);
  EXPECT_EQ(orbit_count_pf(11, 2).m_min, 39u);
}

TEST(Counting, DirectCount) {
  EXPECT_EQ(orbit_count_direct(Field::create(3, 2)), 2u);
  EXPECT_EQ(orbit_count_direct(Field::create(5, 2)), 4u);
  for (std::uint32_t p : {5u, 13u, 17u, 29u, 37u, 41u})
    EXPECT_EQ(orbit_count_direct(Field::create(p, 1)), (p - 1) / 4);
}

TEST(Counting, FormulaMatchesDirectUpTo169) {
  const auto qs = admissible_orders(5, 169);
  EXPECT_EQ(qs.size(), 24u);
  for (auto q : qs) {
    const auto [p, a] = *prime_power(q);
    EXPECT_EQ(orbit_count_pf(p, a).count, orbit_count_direct(Field::create(p, a))) << "q=" << q;
  }
}

TEST(Counting, ClosedForms) {
  const auto c29 = closed_form_params(29, 1);
  EXPECT_EQ(c29.params.v, 210u);
  EXPECT_EQ(c29.params.b, 1015u);
  EXPECT_EQ(c29.params.r, 29u);
  EXPECT_EQ(c29.params.k, 6u);
  const auto c49 = closed_form_params(7, 2);
  EXPECT_EQ(c49.params.v, 600u);
  EXPECT_EQ(c49.params.b, 4900u);
  EXPECT_EQ(c49.params.r, 49u);
  const auto c125 = closed_form_params(5, 3);
  EXPECT_EQ(c125.params.v, 3906u);
  EXPECT_EQ(c125.params.b, 16275u);
  EXPECT_EQ(c125.params.r, 25u);
  EXPECT_EQ(c125.params.lambda_values.at(PairClass::Adjacent), 1u);
  EXPECT_EQ(c125.block_stabilizer_order, 60u);
  EXPECT_EQ(closed_form_params(13, 1).edges, 273u);
  EXPECT_THROW(closed_form_params(7, 1), Error);
}

TEST(Counting, AdmissibleOrders) {
  EXPECT_TRUE(admissible_orders(5, 4).empty());
  EXPECT_EQ(admissible_orders(5, 17), (std::vector<std::uint64_t>{5, 9, 13, 17}));
}
