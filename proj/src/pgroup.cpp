// SPDX-License-Identifier: Apache-2.0
#include "octa/pgroup.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_map>

#include "octa/error.hpp"

namespace octa {

namespace {

struct VectorHash {
  std::size_t operator()(const std::vector<PointIndex>& v) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (auto x : v) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

void require_one_mod_four(const Field& f, const char* module) {
  if (f.q() % 4 != 1)
    throw Error(ErrorKind::BadCongruence, module, "q = " + std::to_string(f.q()) + " is not 1 mod 4");
}

}  // namespace

Mat2 mat_mul(const Field& f, const Mat2& m, const Mat2& n) {
  return Mat2{f.add(f.mul(m.a, n.a), f.mul(m.b, n.c)), f.add(f.mul(m.a, n.b), f.mul(m.b, n.d)),
              f.add(f.mul(m.c, n.a), f.mul(m.d, n.c)), f.add(f.mul(m.c, n.b), f.mul(m.d, n.d))};
}

Vec2 mat_apply(const Field& f, const Mat2& m, const Vec2& v) {
  return Vec2{f.add(f.mul(m.a, v.x), f.mul(m.b, v.y)), f.add(f.mul(m.c, v.x), f.mul(m.d, v.y))};
}

Element mat_det(const Field& f, const Mat2& m) { return f.sub(f.mul(m.a, m.d), f.mul(m.b, m.c)); }

Mat2 mat_scale(const Field& f, Element s, const Mat2& m) {
  return Mat2{f.mul(s, m.a), f.mul(s, m.b), f.mul(s, m.c), f.mul(s, m.d)};
}

Mat2 mat_inverse(const Field& f, const Mat2& m) {
  Element det = mat_det(f, m);
  if (det == f.zero()) throw Error(ErrorKind::DivisionByZero, "pgroup", "singular matrix");
  Element inv = f.inv(det);
  return mat_scale(f, inv, Mat2{m.d, f.neg(m.b), f.neg(m.c), m.a});
}

Mat2 mat_identity(const Field& f) { return Mat2{f.one(), f.zero(), f.zero(), f.one()}; }

PslElement PslElement::make(const Field& f, const Mat2& m) {
  if (mat_det(f, m) != f.one()) throw Error(ErrorKind::BadInput, "pgroup", "matrix determinant is not 1");
  Mat2 neg = mat_scale(f, f.neg(f.one()), m);
  return PslElement(std::min(m, neg));
}

std::uint64_t psl_order(const Field& f, const PslElement& g) {
  const Mat2 id = mat_identity(f);
  const Mat2 minus_id = mat_scale(f, f.neg(f.one()), id);
  Mat2 x = g.matrix();
  std::uint64_t k = 1;
  while (x != id && x != minus_id) {
    x = mat_mul(f, x, g.matrix());
    ++k;
  }
  return k;
}

Perm::Perm(std::vector<PointIndex> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (auto x : images_) {
    if (x >= images_.size() || seen[x]) throw Error(ErrorKind::BadInput, "pgroup", "not a permutation");
    seen[x] = 1;
  }
}

Perm Perm::identity(std::size_t n) {
  std::vector<PointIndex> v(n);
  std::iota(v.begin(), v.end(), PointIndex{0});
  return Perm(std::move(v));
}

Perm Perm::compose(const Perm& other) const {
  std::vector<PointIndex> v(size());
  for (std::size_t x = 0; x < size(); ++x) v[x] = images_[other.images_[x]];
  Perm r;
  r.images_ = std::move(v);
  return r;
}

Perm Perm::inverse() const {
  std::vector<PointIndex> v(size());
  for (std::size_t x = 0; x < size(); ++x) v[images_[x]] = static_cast<PointIndex>(x);
  Perm r;
  r.images_ = std::move(v);
  return r;
}

Perm Perm::power(std::uint64_t e) const {
  Perm result = identity(size()), base = *this;
  while (e) {
    if (e & 1) result = result.compose(base);
    base = base.compose(base);
    e >>= 1;
  }
  return result;
}

bool Perm::is_identity() const {
  for (std::size_t x = 0; x < size(); ++x)
    if (images_[x] != x) return false;
  return true;
}

std::uint64_t Perm::order() const {
  std::vector<char> seen(size(), 0);
  std::uint64_t l = 1;
  for (std::size_t x = 0; x < size(); ++x) {
    if (seen[x]) continue;
    std::uint64_t len = 0;
    for (std::size_t y = x; !seen[y]; y = images_[y]) {
      seen[y] = 1;
      ++len;
    }
    l = std::lcm(l, len);
  }
  return l;
}

PointSet::PointSet(Field field) : field_(std::move(field)) {
  require_one_mod_four(field_, "pgroup");
  const std::uint32_t q = field_.q();
  const Element i = field_.i();
  const Element scalars[3] = {field_.neg(field_.one()), i, field_.neg(i)};
  lookup_.assign(std::size_t{q} * q, static_cast<PointIndex>(-1));
  for (std::uint32_t x = 0; x < q; ++x) {
    for (std::uint32_t y = 0; y < q; ++y) {
      if (x == 0 && y == 0) continue;
      const std::size_t key = std::size_t{x} * q + y;
      if (lookup_[key] != static_cast<PointIndex>(-1)) continue;
      // Vectors are visited in lex order, so the first member met is the class minimum.
      const auto idx = static_cast<PointIndex>(points_.size());
      Vec2 v{Element{x}, Element{y}};
      points_.push_back(ProjPoint{v, idx});
      lookup_[key] = idx;
      for (Element s : scalars) {
        Vec2 w{field_.mul(s, v.x), field_.mul(s, v.y)};
        lookup_[std::size_t{w.x.code} * q + w.y.code] = idx;
      }
    }
  }
}

ProjPoint PointSet::canonicalize(const Vec2& v) const {
  if (v.x == field_.zero() && v.y == field_.zero())
    throw Error(ErrorKind::ZeroVector, "pgroup", "cannot canonicalize the zero vector");
  return points_[lookup_[std::size_t{v.x.code} * field_.q() + v.y.code]];
}

PointIndex PointSet::index_of(const Vec2& v) const { return canonicalize(v).index; }

PointIndex PointSet::act(const Mat2& m, PointIndex x) const {
  const Vec2 w = mat_apply(field_, m, points_[x].rep);
  return lookup_[std::size_t{w.x.code} * field_.q() + w.y.code];
}

Perm PointSet::perm_of(const Mat2& m) const {
  std::vector<PointIndex> img(size());
  for (PointIndex x = 0; x < size(); ++x) img[x] = act(m, x);
  return Perm(std::move(img));
}

std::vector<PslElement> psl_generators(const Field& f) {
  std::vector<PslElement> gens;
  for (std::uint32_t k = 0; k < f.alpha(); ++k) {
    Element w = f.pow(f.omega(), k);
    gens.push_back(PslElement::make(f, Mat2{f.one(), w, f.zero(), f.one()}));
    gens.push_back(PslElement::make(f, Mat2{f.one(), f.zero(), w, f.one()}));
  }
  return gens;
}

std::vector<Perm> psl_generator_perms(const PointSet& points) {
  std::vector<Perm> out;
  for (const auto& g : psl_generators(points.field())) out.push_back(points.perm_of(g));
  return out;
}

std::uint64_t group_order(const Field& f) {
  const std::uint64_t q = f.q();
  return q * (q * q - 1) / (f.p() == 2 ? 1 : 2);
}

std::vector<PslElement> enumerate_psl(const Field& f) {
  const std::uint32_t q = f.q();
  std::vector<PslElement> out;
  out.reserve(std::size_t{q} * (std::size_t{q} * q - 1));
  for (std::uint32_t a = 0; a < q; ++a) {
    for (std::uint32_t b = 0; b < q; ++b) {
      if (a != 0) {
        for (std::uint32_t c = 0; c < q; ++c) {
          Element d = f.div(f.add(f.one(), f.mul(Element{b}, Element{c})), Element{a});
          out.push_back(PslElement::make(f, Mat2{Element{a}, Element{b}, Element{c}, d}));
        }
      } else if (b != 0) {
        Element c = f.neg(f.inv(Element{b}));
        for (std::uint32_t d = 0; d < q; ++d)
          out.push_back(PslElement::make(f, Mat2{Element{a}, Element{b}, c, Element{d}}));
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

PointStabilizerReport point_stabilizer_report(const PointSet& points) {
  const Field& f = points.field();
  PointStabilizerReport report;
  report.order = group_order(f) / points.size();
  const PointIndex base = points.index_of(Vec2{f.one(), f.zero()});
  std::vector<PslElement> elems;
  bool all_fix = true;
  for (Element u : {f.one(), f.i()}) {
    for (std::uint32_t x = 0; x < f.q(); ++x) {
      auto g = PslElement::make(f, Mat2{u, Element{x}, f.zero(), f.inv(u)});
      all_fix = all_fix && points.act(g.matrix(), base) == base;
      elems.push_back(g);
    }
  }
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  report.shape_verified = all_fix && elems.size() == 2ull * f.q() && report.order == 2ull * f.q();
  return report;
}

std::array<Vec2, 6> basic_octahedron_vectors(const Field& f) {
  const Element one = f.one(), zero = f.zero(), i = f.i();
  return {Vec2{one, zero}, Vec2{zero, one},           Vec2{one, one},
          Vec2{f.add(one, i), one}, Vec2{i, one}, Vec2{one, f.sub(one, i)}};
}

Perm frobenius_perm(const PointSet& points) {
  const Field& f = points.field();
  std::vector<PointIndex> img(points.size());
  for (PointIndex x = 0; x < points.size(); ++x) {
    const Vec2& v = points.rep(x);
    img[x] = points.index_of(Vec2{f.frobenius(v.x), f.frobenius(v.y)});
  }
  return Perm(std::move(img));
}

Mat2 sigma_matrix(const Field& f) { return Mat2{f.i(), f.one(), f.zero(), f.one()}; }

Perm sigma_perm(const PointSet& points) {
  const Field& f = points.field();
  require_one_mod_four(f, "pgroup");
  Perm sigma = points.perm_of(sigma_matrix(f));

  const auto t = basic_octahedron_vectors(f);
  std::array<PointIndex, 6> idx{};
  for (int k = 0; k < 6; ++k) idx[k] = points.index_of(t[k]);
  auto fail = [](const std::string& clause) {
    throw Error(ErrorKind::ContractViolation, "pgroup", "sigma: " + clause);
  };

  std::vector<PointIndex> block(idx.begin(), idx.end()), image;
  for (auto x : block) image.push_back(sigma(x));
  std::sort(block.begin(), block.end());
  std::sort(image.begin(), image.end());
  if (block != image) fail("does not fix the basic block");
  if (sigma(idx[0]) != idx[0] || sigma(idx[5]) != idx[5]) fail("does not fix the axis (1,0), (1,1-i)");
  // equator (0,1) -> (1,1) -> (1+i,1) -> (i,1) -> (0,1)
  const PointIndex equator[4] = {idx[1], idx[2], idx[3], idx[4]};
  for (int k = 0; k < 4; ++k)
    if (sigma(equator[k]) != equator[(k + 1) % 4]) fail("equator is not a 4-cycle");
  const Element i = f.i();
  const Mat2 g{f.neg(i), f.add(f.neg(f.one()), i), f.zero(), i};
  if (sigma.compose(sigma) != points.perm_of(PslElement::make(f, g))) fail("square is not the half-turn g");
  return sigma;
}

SetOrbit orbit_of_set(std::span<const Perm> gens, std::vector<PointIndex> seed) {
  std::sort(seed.begin(), seed.end());
  SetOrbit orbit;
  std::unordered_map<std::vector<PointIndex>, std::size_t, VectorHash> seen;
  seen.emplace(seed, 0);
  orbit.sets.push_back(std::move(seed));
  orbit.parent.push_back(-1);
  orbit.via.push_back(-1);
  for (std::size_t head = 0; head < orbit.sets.size(); ++head) {
    for (std::size_t g = 0; g < gens.size(); ++g) {
      std::vector<PointIndex> img;
      img.reserve(orbit.sets[head].size());
      for (auto x : orbit.sets[head]) img.push_back(gens[g](x));
      std::sort(img.begin(), img.end());
      auto [it, inserted] = seen.emplace(img, orbit.sets.size());
      if (!inserted) continue;
      orbit.sets.push_back(std::move(img));
      orbit.parent.push_back(static_cast<std::int64_t>(head));
      orbit.via.push_back(static_cast<std::int32_t>(g));
    }
  }
  return orbit;
}

std::vector<PointIndex> orbit_of_point(std::span<const Perm> gens, PointIndex seed) {
  if (gens.empty()) return {seed};
  std::vector<char> seen(gens[0].size(), 0);
  std::vector<PointIndex> orbit{seed};
  seen[seed] = 1;
  for (std::size_t head = 0; head < orbit.size(); ++head) {
    for (const auto& g : gens) {
      PointIndex y = g(orbit[head]);
      if (seen[y]) continue;
      seen[y] = 1;
      orbit.push_back(y);
    }
  }
  return orbit;
}

}  // namespace octa
