// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "octa/field.hpp"

namespace octa {

using PointIndex = std::uint32_t;

struct Vec2 {
  Element x, y;
  friend constexpr auto operator<=>(const Vec2&, const Vec2&) = default;
};

struct ProjPoint {
  Vec2 rep;  // lex-minimum of {v, -v, iv, -iv}
  PointIndex index = 0;
};

struct Mat2 {
  Element a, b, c, d;
  friend constexpr auto operator<=>(const Mat2&, const Mat2&) = default;
};

Mat2 mat_mul(const Field& f, const Mat2& m, const Mat2& n);
Vec2 mat_apply(const Field& f, const Mat2& m, const Vec2& v);
Element mat_det(const Field& f, const Mat2& m);
Mat2 mat_scale(const Field& f, Element s, const Mat2& m);
Mat2 mat_inverse(const Field& f, const Mat2& m);
Mat2 mat_identity(const Field& f);

/// An element of PSL(2,q): a determinant-one matrix, stored as the lex-smaller of {M, -M}.
class PslElement {
 public:
  static PslElement make(const Field& f, const Mat2& m);

  const Mat2& matrix() const { return m_; }
  friend auto operator<=>(const PslElement&, const PslElement&) = default;

 private:
  explicit PslElement(const Mat2& m) : m_(m) {}
  Mat2 m_;
};

/// Order of g in PSL(2,q), i.e. least k with g^k = +-I.
std::uint64_t psl_order(const Field& f, const PslElement& g);

/// A permutation of point indices.
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<PointIndex> images);
  static Perm identity(std::size_t n);

  std::size_t size() const { return images_.size(); }
  PointIndex operator()(PointIndex x) const { return images_[x]; }
  const std::vector<PointIndex>& images() const { return images_; }

  /// (this * other)(x) = this(other(x)).
  Perm compose(const Perm& other) const;
  Perm inverse() const;
  Perm power(std::uint64_t e) const;
  bool is_identity() const;
  std::uint64_t order() const;

  friend bool operator==(const Perm&, const Perm&) = default;

 private:
  std::vector<PointIndex> images_;
};

/// The point set (F_q^2 \ {0}) / <i>, sorted by canonical representative.
class PointSet {
 public:
  explicit PointSet(Field field);

  const Field& field() const { return field_; }
  std::size_t size() const { return points_.size(); }
  const std::vector<ProjPoint>& points() const { return points_; }
  const Vec2& rep(PointIndex x) const { return points_[x].rep; }

  ProjPoint canonicalize(const Vec2& v) const;
  PointIndex index_of(const Vec2& v) const;

  PointIndex act(const Mat2& m, PointIndex x) const;
  Perm perm_of(const Mat2& m) const;
  Perm perm_of(const PslElement& g) const { return perm_of(g.matrix()); }

 private:
  Field field_;
  std::vector<ProjPoint> points_;
  std::vector<PointIndex> lookup_;  // x.code * q + y.code -> point index
};

std::vector<PslElement> psl_generators(const Field& f);
std::vector<Perm> psl_generator_perms(const PointSet& points);

/// q(q^2-1)/2.
std::uint64_t group_order(const Field& f);

/// Every element of PSL(2,q), each once.
std::vector<PslElement> enumerate_psl(const Field& f);

struct PointStabilizerReport {
  std::uint64_t order = 0;
  bool shape_verified = false;
};

PointStabilizerReport point_stabilizer_report(const PointSet& points);

/// The six vertices of the basic octahedron, in the order
/// (1,0), (0,1), (1,1), (1+i,1), (i,1), (1,1-i).
std::array<Vec2, 6> basic_octahedron_vectors(const Field& f);

Perm frobenius_perm(const PointSet& points);

/// The extra rotation [[i,1],[0,1]]. The permutation is checked against its
/// octahedral contract on construction; a failed clause throws ContractViolation.
Mat2 sigma_matrix(const Field& f);
Perm sigma_perm(const PointSet& points);

/// Schreier tree of a set orbit: sets[k] was discovered as gens[via[k]] applied to sets[parent[k]].
struct SetOrbit {
  std::vector<std::vector<PointIndex>> sets;
  std::vector<std::int64_t> parent;
  std::vector<std::int32_t> via;
};

/// Breadth-first closure of a sorted point set under the generators.
SetOrbit orbit_of_set(std::span<const Perm> gens, std::vector<PointIndex> seed);

/// Orbit of a single point, in discovery order.
std::vector<PointIndex> orbit_of_point(std::span<const Perm> gens, PointIndex seed);

}  // namespace octa
