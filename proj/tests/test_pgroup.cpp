// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <set>

#include "octa/error.hpp"
#include "octa/pgroup.hpp"

using namespace octa;

namespace {

Vec2 vec(const Field& f, std::int64_t x, std::int64_t y) { return Vec2{f.from_int(x), f.from_int(y)}; }

// Brute-force orbit of a point under every SL(2,q) matrix.
std::size_t full_orbit_size(const PointSet& pts, PointIndex x) {
  std::set<PointIndex> seen;
  for (const auto& g : enumerate_psl(pts.field())) seen.insert(pts.act(g.matrix(), x));
  return seen.size();
}

}  // namespace

TEST(PointSet, Sizes) {
  EXPECT_EQ(PointSet(Field::create(5, 1)).size(), 6u);
  EXPECT_EQ(PointSet(Field::create(3, 2)).size(), 20u);
  EXPECT_EQ(PointSet(Field::create(13, 1)).size(), 42u);
  EXPECT_THROW(PointSet(Field::create(7, 1)), Error);
}

TEST(PointSet, CanonicalizeF5) {
  const Field f = Field::create(5, 1);
  const PointSet pts(f);
  for (auto v : {vec(f, 1, 3), vec(f, 4, 2), vec(f, 2, 1), vec(f, 3, 4)}) EXPECT_EQ(pts.canonicalize(v).rep, vec(f, 1, 3));
}

TEST(PointSet, CanonicalizeIsIdempotentAndInClass) {
  const Field f = Field::create(3, 2);
  const PointSet pts(f);
  const Element i = f.i();
  for (std::uint32_t x = 0; x < f.q(); ++x)
    for (std::uint32_t y = 0; y < f.q(); ++y) {
      if (!x && !y) continue;
      const Vec2 v{Element{x}, Element{y}};
      const Vec2 c = pts.canonicalize(v).rep;
      EXPECT_EQ(pts.canonicalize(c).rep, c);
      bool member = false;
      Element s = f.one();
      for (int k = 0; k < 4; ++k, s = f.mul(s, i)) member |= Vec2{f.mul(s, v.x), f.mul(s, v.y)} == c;
      EXPECT_TRUE(member);
    }
  EXPECT_THROW(pts.canonicalize(Vec2{}), Error);
}

TEST(Pgroup, Generators) {
  EXPECT_EQ(psl_generators(Field::create(13, 1)).size(), 2u);
  EXPECT_EQ(psl_generators(Field::create(3, 2)).size(), 4u);
  const Field f = Field::create(13, 1);
  const auto gens = psl_generators(f);
  EXPECT_EQ(gens[0], PslElement::make(f, Mat2{f.one(), f.one(), f.zero(), f.one()}));
  EXPECT_EQ(gens[1], PslElement::make(f, Mat2{f.one(), f.zero(), f.one(), f.one()}));
}

TEST(Pgroup, Action) {
  const Field f = Field::create(13, 1);
  const PointSet pts(f);
  const Mat2 t{f.one(), f.one(), f.zero(), f.one()};
  EXPECT_EQ(pts.act(t, pts.index_of(vec(f, 0, 1))), pts.index_of(vec(f, 1, 1)));
  for (PointIndex x = 0; x < pts.size(); ++x) EXPECT_EQ(pts.act(mat_identity(f), x), x);
  EXPECT_THROW(PslElement::make(f, Mat2{f.one(), f.one(), f.one(), f.one()}), Error);
}

TEST(Pgroup, GroupOrder) {
  EXPECT_EQ(group_order(Field::create(3, 2)), 360u);
  EXPECT_EQ(group_order(Field::create(13, 1)), 1092u);
  EXPECT_EQ(group_order(Field::create(5, 1)), 60u);
  for (auto [p, a] : {std::pair{5u, 1u}, {3u, 2u}, {13u, 1u}}) {
    const Field f = Field::create(p, a);
    EXPECT_EQ(enumerate_psl(f).size(), group_order(f));
  }
}

TEST(Pgroup, GeneratorsAreTransitive) {
  for (auto [p, a] : {std::pair{5u, 1u}, {3u, 2u}, {13u, 1u}, {5u, 2u}}) {
    const PointSet pts(Field::create(p, a));
    const auto gens = psl_generator_perms(pts);
    EXPECT_EQ(orbit_of_point(gens, 0).size(), pts.size());
    EXPECT_EQ(full_orbit_size(pts, 0), pts.size());
  }
}

TEST(Pgroup, PointStabilizer) {
  for (auto [p, a, order] : {std::tuple{3u, 2u, 18u}, {13u, 1u, 26u}, {5u, 1u, 10u}, {17u, 1u, 34u}}) {
    const auto rep = point_stabilizer_report(PointSet(Field::create(p, a)));
    EXPECT_EQ(rep.order, order);
    EXPECT_TRUE(rep.shape_verified);
  }
}

TEST(Pgroup, FrobeniusTrivialOverPrimeField) {
  const PointSet pts(Field::create(13, 1));
  EXPECT_TRUE(frobenius_perm(pts).is_identity());
  const PointSet pts9(Field::create(3, 2));
  EXPECT_EQ(frobenius_perm(pts9).order(), 2u);
}

TEST(Pgroup, SigmaContract) {
  for (auto [p, a] : {std::pair{5u, 1u}, {3u, 2u}, {13u, 1u}, {5u, 2u}, {17u, 1u}}) {
    const PointSet pts(Field::create(p, a));
    const Perm s = sigma_perm(pts);
    const auto octa_vecs = basic_octahedron_vectors(pts.field());
    std::set<PointIndex> t;
    for (const auto& v : octa_vecs) t.insert(pts.index_of(v));
    EXPECT_EQ(t.size(), 6u);
    for (auto x : t) EXPECT_TRUE(t.count(s(x)));
    EXPECT_EQ(s(pts.index_of(octa_vecs[0])), pts.index_of(octa_vecs[0]));
  }
}

TEST(Pgroup, PermBasics) {
  const Perm a(std::vector<PointIndex>{1, 2, 0, 3});
  EXPECT_EQ(a.order(), 3u);
  EXPECT_TRUE(a.compose(a.inverse()).is_identity());
  EXPECT_EQ(a.power(3), Perm::identity(4));
  EXPECT_EQ(a.compose(a)(0), 2u);
  EXPECT_THROW(Perm(std::vector<PointIndex>{0, 0}), Error);
}

TEST(Pgroup, SetOrbitTree) {
  const PointSet pts(Field::create(3, 2));
  const auto gens = psl_generator_perms(pts);
  const SetOrbit orb = orbit_of_set(gens, {0, 1});
  for (std::size_t k = 1; k < orb.sets.size(); ++k) {
    std::vector<PointIndex> img;
    for (auto x : orb.sets[orb.parent[k]]) img.push_back(gens[orb.via[k]](x));
    std::sort(img.begin(), img.end());
    EXPECT_EQ(img, orb.sets[k]);
  }
}
