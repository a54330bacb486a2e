// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <set>
#include <sstream>

#include "octa/counting.hpp"
#include "octa/design.hpp"
#include "octa/error.hpp"

using namespace octa;

namespace {

Design make(std::uint32_t p, std::uint32_t a) { return build_design(Field::create(p, a)); }

// Independent lambda count straight from the block list.
std::map<std::pair<PointIndex, PointIndex>, std::uint32_t> naive_lambda(const Design& d) {
  std::map<std::pair<PointIndex, PointIndex>, std::uint32_t> out;
  for (const auto& b : d.blocks)
    for (int i = 0; i < 6; ++i)
      for (int j = i + 1; j < 6; ++j) ++out[{b.points[i], b.points[j]}];
  return out;
}

}  // namespace

TEST(Design, BasicBlockIsSixPoints) {
  for (auto [p, a] : {std::pair{5u, 1u}, {3u, 2u}, {13u, 1u}, {5u, 2u}}) {
    const PointSet pts(Field::create(p, a));
    const Block t = basic_block(pts);
    EXPECT_EQ(std::set<PointIndex>(t.points.begin(), t.points.end()).size(), 6u);
    std::set<PointIndex> in_diagonals;
    for (auto [x, y] : t.diagonals) {
      in_diagonals.insert(x);
      in_diagonals.insert(y);
    }
    EXPECT_EQ(in_diagonals.size(), 6u);
  }
}

TEST(Design, BlockCounts) {
  EXPECT_EQ(make(5, 1).b(), 1u);
  EXPECT_TRUE(make(5, 1).degenerate);
  EXPECT_EQ(make(3, 2).b(), 30u);
  EXPECT_EQ(make(13, 1).b(), 91u);
  EXPECT_EQ(make(5, 2).b(), 130u);
  EXPECT_EQ(make(41, 1).b(), 2870u);
}

TEST(Design, Parameters) {
  const DesignParams p13 = verify_counts(make(13, 1));
  EXPECT_EQ(p13.v, 42u);
  EXPECT_EQ(p13.b, 91u);
  EXPECT_EQ(p13.r, 13u);
  EXPECT_EQ(p13.k, 6u);
  EXPECT_EQ(p13.lambda_values.at(PairClass::Edge), 4u);
  EXPECT_EQ(p13.lambda_values.at(PairClass::Diagonal), 1u);

  const DesignParams p25 = verify_counts(make(5, 2));
  EXPECT_EQ(p25.v, 156u);
  EXPECT_EQ(p25.b, 130u);
  EXPECT_EQ(p25.r, 5u);
  EXPECT_EQ(p25.lambda_values.at(PairClass::Adjacent), 1u);

  const DesignParams p5 = verify_counts(make(5, 1));
  EXPECT_EQ(p5.v, 6u);
  EXPECT_EQ(p5.b, 1u);
  EXPECT_EQ(p5.r, 1u);
  EXPECT_EQ(p5.lambda_values.count(PairClass::Null), 0u);
}

TEST(Design, LambdaTableMatchesNaiveCount) {
  for (auto [p, a] : {std::pair{3u, 2u}, {13u, 1u}, {5u, 2u}}) {
    const Design d = make(p, a);
    const auto naive = naive_lambda(d);
    EXPECT_EQ(d.lambda.size(), naive.size());
    for (const auto& [pr, c] : naive) EXPECT_EQ(d.lambda.at(pr.first, pr.second), c);
    EXPECT_EQ(d.lambda.at(0, 0), 0u);
  }
}

TEST(Design, EdgeDiagonalCensus) {
  const auto c13 = edge_diagonal_census(make(13, 1));
  EXPECT_EQ(c13.edges, 273u);
  EXPECT_EQ(c13.diagonals, 273u);
  const auto c9 = edge_diagonal_census(make(3, 2));
  EXPECT_EQ(c9.blocks_per_edge, 4u);
  EXPECT_EQ(c9.blocks_per_diagonal, 1u);
  EXPECT_THROW(edge_diagonal_census(make(5, 2)), Error);
}

TEST(Design, BlockStabilizer) {
  const auto r13 = block_stabilizer_report(make(13, 1));
  EXPECT_EQ(r13.order, 12u);
  ASSERT_TRUE(r13.brute_forced);
  for (const auto& [ord, cnt] : r13.element_orders) EXPECT_LE(ord, 3u);
  EXPECT_EQ(r13.element_orders.at(1), 1u);
  EXPECT_EQ(r13.element_orders.at(2), 3u);
  EXPECT_EQ(r13.element_orders.at(3), 8u);

  const auto r25 = block_stabilizer_report(make(5, 2));
  EXPECT_EQ(r25.order, 60u);

  const auto r9 = block_stabilizer_report(make(3, 2));
  ASSERT_TRUE(r9.explicit_reps_verified);
  EXPECT_TRUE(*r9.explicit_reps_verified);
}

TEST(Design, ListedRepresentativesFixBasicBlock) {
  for (auto [p, a] : {std::pair{3u, 2u}, {13u, 1u}, {17u, 1u}}) {
    const Field f = Field::create(p, a);
    const PointSet pts(f);
    const Block t = basic_block(pts);
    const auto reps = basic_block_stabilizer_reps(f);
    EXPECT_EQ(reps.size(), 12u);
    std::set<PslElement> distinct;
    for (const auto& m : reps) {
      distinct.insert(PslElement::make(f, m));
      std::array<PointIndex, 6> img{};
      for (int k = 0; k < 6; ++k) img[k] = pts.act(m, t.points[k]);
      std::sort(img.begin(), img.end());
      EXPECT_EQ(img, t.points);
    }
    EXPECT_EQ(distinct.size(), 12u);
  }
}

TEST(Design, ReplicationUniform) {
  const Design d = make(17, 1);
  for (PointIndex x = 0; x < d.v(); ++x) EXPECT_EQ(d.replication(x), 17u);
}

TEST(Design, DiagonalsAreBlockMatchings) {
  const Design d = make(13, 1);
  for (const auto& b : d.blocks) {
    std::set<PointIndex> cover;
    for (auto [x, y] : b.diagonals) {
      EXPECT_TRUE(std::binary_search(b.points.begin(), b.points.end(), x));
      EXPECT_TRUE(std::binary_search(b.points.begin(), b.points.end(), y));
      cover.insert(x);
      cover.insert(y);
    }
    EXPECT_EQ(cover.size(), 6u);
  }
}

TEST(Design, ClosedFormsAgreeWithConstruction) {
  for (auto [p, a] : {std::pair{3u, 2u}, {13u, 1u}, {17u, 1u}, {5u, 2u}, {29u, 1u}}) {
    EXPECT_EQ(verify_counts(make(p, a)), closed_form_params(p, a).params);
  }
}

TEST(Design, DumpFormat) {
  const Design d = make(3, 2);
  std::ostringstream out;
  write_design(d, out);
  std::istringstream in(out.str());
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, "9 20 30");
  std::string line;
  std::size_t lines = 0;
  while (std::getline(in, line)) {
    ++lines;
    EXPECT_NE(line.find(" | "), std::string::npos);
  }
  EXPECT_EQ(lines, 30u);
}
