// SPDX-License-Identifier: Apache-2.0
#include "octa/design.hpp"

#include <algorithm>
#include <ostream>
#include <unordered_map>

#include "octa/error.hpp"

namespace octa {

namespace {

struct BlockHash {
  std::size_t operator()(const std::array<PointIndex, 6>& a) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (auto x : a) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

[[noreturn]] void mismatch(const std::string& field, std::uint64_t expected, std::uint64_t got) {
  throw Error(ErrorKind::CountMismatch, "design",
              field + ": expected " + std::to_string(expected) + ", got " + std::to_string(got));
}

void check(const std::string& field, std::uint64_t expected, std::uint64_t got) {
  if (expected != got) mismatch(field, expected, got);
}

std::uint64_t key_of(PointPair e, std::uint32_t n) { return std::uint64_t{e.first} * n + e.second; }

std::array<PointIndex, 6> sorted_image(const Perm& g, const std::array<PointIndex, 6>& pts) {
  std::array<PointIndex, 6> img{};
  for (int k = 0; k < 6; ++k) img[k] = g(pts[k]);
  std::sort(img.begin(), img.end());
  return img;
}

std::array<PointPair, 3> image_diagonals(const Perm& g, const std::array<PointPair, 3>& diags) {
  std::array<PointPair, 3> out{};
  for (int k = 0; k < 3; ++k) out[k] = make_pair_sorted(g(diags[k].first), g(diags[k].second));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::string_view to_string(PairClass c) {
  switch (c) {
    case PairClass::Identity: return "identity";
    case PairClass::Edge: return "edge";
    case PairClass::Diagonal: return "diagonal";
    case PairClass::Adjacent: return "adjacent";
    case PairClass::Null: return "null";
  }
  return "unknown";
}

bool Block::is_diagonal(PointIndex a, PointIndex b) const {
  const PointPair e = make_pair_sorted(a, b);
  return std::find(diagonals.begin(), diagonals.end(), e) != diagonals.end();
}

LambdaTable LambdaTable::from_occurrences(std::vector<std::uint64_t> keys, std::uint32_t n) {
  std::sort(keys.begin(), keys.end());
  LambdaTable t;
  t.n_ = n;
  for (std::size_t k = 0; k < keys.size();) {
    std::size_t j = k;
    while (j < keys.size() && keys[j] == keys[k]) ++j;
    t.keys_.push_back(keys[k]);
    t.counts_.push_back(static_cast<std::uint32_t>(j - k));
    k = j;
  }
  return t;
}

std::uint32_t LambdaTable::at(PointIndex x, PointIndex y) const {
  if (x > y) std::swap(x, y);
  const std::uint64_t key = std::uint64_t{x} * n_ + y;
  auto it = std::lower_bound(keys_.begin(), keys_.end(), key);
  if (it == keys_.end() || *it != key) return 0;
  return counts_[static_cast<std::size_t>(it - keys_.begin())];
}

Block basic_block(const PointSet& points) {
  const auto vecs = basic_octahedron_vectors(points.field());
  std::array<PointIndex, 6> idx{};
  for (int k = 0; k < 6; ++k) idx[k] = points.index_of(vecs[k]);
  Block t;
  t.points = idx;
  std::sort(t.points.begin(), t.points.end());
  if (std::adjacent_find(t.points.begin(), t.points.end()) != t.points.end())
    throw Error(ErrorKind::DegenerateBlock, "design", "basic block has repeated points");
  t.diagonals = {make_pair_sorted(idx[0], idx[5]), make_pair_sorted(idx[1], idx[3]), make_pair_sorted(idx[2], idx[4])};
  std::sort(t.diagonals.begin(), t.diagonals.end());
  return t;
}

Design build_design(const Field& f) {
  Design d{f, std::make_shared<const PointSet>(f), {}, {}, {}, {}, false, false};
  d.generators = psl_generator_perms(*d.points);
  d.char5 = f.is_char5_identity();

  const Block t = basic_block(*d.points);
  SetOrbit orbit = orbit_of_set(d.generators, std::vector<PointIndex>(t.points.begin(), t.points.end()));

  d.blocks.resize(orbit.sets.size());
  d.blocks[0] = t;
  for (std::size_t k = 1; k < orbit.sets.size(); ++k) {
    const Block& parent = d.blocks[static_cast<std::size_t>(orbit.parent[k])];
    const Perm& g = d.generators[static_cast<std::size_t>(orbit.via[k])];
    std::copy(orbit.sets[k].begin(), orbit.sets[k].end(), d.blocks[k].points.begin());
    d.blocks[k].diagonals = image_diagonals(g, parent.diagonals);
  }
  d.degenerate = d.blocks.size() == 1;

  const auto n = static_cast<std::uint32_t>(d.v());
  d.point_to_blocks.assign(n, {});
  std::vector<std::uint64_t> keys;
  keys.reserve(d.blocks.size() * 15);
  for (std::size_t k = 0; k < d.blocks.size(); ++k) {
    const auto& pts = d.blocks[k].points;
    for (int a = 0; a < 6; ++a) {
      d.point_to_blocks[pts[a]].push_back(static_cast<std::uint32_t>(k));
      for (int b = a + 1; b < 6; ++b) keys.push_back(std::uint64_t{pts[a]} * n + pts[b]);
    }
  }
  d.lambda = LambdaTable::from_occurrences(std::move(keys), n);
  return d;
}

DesignParams verify_counts(const Design& d) {
  const std::uint64_t q = d.field.q();
  DesignParams params;
  params.char5 = d.char5;
  params.v = d.v();
  params.b = d.b();
  params.k = 6;
  params.m = (q - 3) / 2;

  check("v", (q * q - 1) / 4, params.v);
  check("b", q * (q * q - 1) / (d.char5 ? 120 : 24), params.b);
  for (const auto& blk : d.blocks) {
    auto pts = blk.points;
    check("k", 6, static_cast<std::uint64_t>(std::unique(pts.begin(), pts.end()) - pts.begin()));
  }
  params.r = d.point_to_blocks.empty() ? 0 : d.point_to_blocks[0].size();
  for (const auto& lst : d.point_to_blocks) check("r (uniformity)", params.r, lst.size());
  check("r", d.char5 ? q / 5 : q, params.r);
  check("bk = vr", params.b * params.k, params.v * params.r);

  std::uint64_t lambda_sum = 0;
  d.lambda.for_each([&](PointIndex, PointIndex, std::uint32_t c) { lambda_sum += c; });
  check("sum of lambda over pairs", 15 * params.b, lambda_sum);

  for (const auto& blk : d.blocks) {
    for (int a = 0; a < 6; ++a) {
      for (int b = a + 1; b < 6; ++b) {
        const PointIndex x = blk.points[a], y = blk.points[b];
        const std::uint32_t lam = d.lambda.at(x, y);
        if (d.char5)
          check("lambda(adjacent)", 1, lam);
        else if (blk.is_diagonal(x, y))
          check("lambda(diagonal)", 1, lam);
        else
          check("lambda(edge)", 4, lam);
      }
    }
  }
  if (d.char5) {
    params.lambda_values[PairClass::Adjacent] = 1;
  } else {
    params.lambda_values[PairClass::Edge] = 4;
    params.lambda_values[PairClass::Diagonal] = 1;
  }
  if (d.lambda.size() < params.v * (params.v - 1) / 2) params.lambda_values[PairClass::Null] = 0;
  return params;
}

EdgeDiagonalCensus edge_diagonal_census(const Design& d) {
  if (d.char5) throw Error(ErrorKind::BadInput, "design", "edge/diagonal census needs p != 5");
  const auto n = static_cast<std::uint32_t>(d.v());
  const std::uint64_t q = d.field.q();

  std::vector<std::uint64_t> edges, diags;
  for (const auto& blk : d.blocks) {
    for (int a = 0; a < 6; ++a)
      for (int b = a + 1; b < 6; ++b) {
        const PointPair e{blk.points[a], blk.points[b]};
        (blk.is_diagonal(e.first, e.second) ? diags : edges).push_back(key_of(e, n));
      }
  }
  for (auto* v : {&edges, &diags}) {
    std::sort(v->begin(), v->end());
    v->erase(std::unique(v->begin(), v->end()), v->end());
  }
  std::vector<std::uint64_t> both;
  std::set_intersection(edges.begin(), edges.end(), diags.begin(), diags.end(), std::back_inserter(both));
  if (!both.empty())
    throw Error(ErrorKind::LabelClash, "design",
                std::to_string(both.size()) + " pairs labelled both edge and diagonal, e.g. " +
                    std::to_string(both[0] / n) + "-" + std::to_string(both[0] % n));

  // Labels must be carried consistently by every generator.
  std::unordered_map<std::array<PointIndex, 6>, std::size_t, BlockHash> index;
  index.reserve(d.blocks.size());
  for (std::size_t k = 0; k < d.blocks.size(); ++k) index.emplace(d.blocks[k].points, k);
  for (const auto& blk : d.blocks) {
    for (const auto& g : d.generators) {
      auto it = index.find(sorted_image(g, blk.points));
      if (it == index.end()) throw Error(ErrorKind::CountMismatch, "design", "block orbit is not closed");
      if (d.blocks[it->second].diagonals != image_diagonals(g, blk.diagonals))
        throw Error(ErrorKind::LabelClash, "design", "diagonal labels are not equivariant");
    }
  }

  EdgeDiagonalCensus census;
  census.edges = edges.size();
  census.diagonals = diags.size();
  check("|edges|", q * (q * q - 1) / 8, census.edges);
  check("|diagonals|", q * (q * q - 1) / 8, census.diagonals);
  auto uniform_lambda = [&](const std::vector<std::uint64_t>& keys, const char* what) {
    std::uint32_t value = d.lambda.at(static_cast<PointIndex>(keys[0] / n), static_cast<PointIndex>(keys[0] % n));
    for (auto key : keys)
      check(what, value, d.lambda.at(static_cast<PointIndex>(key / n), static_cast<PointIndex>(key % n)));
    return value;
  };
  census.blocks_per_edge = uniform_lambda(edges, "blocks per edge");
  census.blocks_per_diagonal = uniform_lambda(diags, "blocks per diagonal");
  check("blocks per edge", 4, census.blocks_per_edge);
  check("blocks per diagonal", 1, census.blocks_per_diagonal);
  return census;
}

std::vector<Mat2> basic_block_stabilizer_reps(const Field& f) {
  const Element o = f.one(), z = f.zero(), i = f.i();
  const Element mo = f.neg(o), mi = f.neg(i);
  const Element opi = f.add(o, i), omi = f.sub(o, i);
  const Element mopi = f.neg(opi);     // -1-i
  const Element mopl = f.add(mo, i);  // -1+i
  return {
      Mat2{o, z, z, o},       Mat2{z, mi, mi, mo},     Mat2{mo, i, i, z},       Mat2{mi, z, mopi, i},
      Mat2{mopl, o, i, mi},   Mat2{o, mo, o, z},       Mat2{o, mopi, omi, mo},  Mat2{mopi, i, mo, i},
      Mat2{i, o, i, omi},     Mat2{mi, mopl, z, i},    Mat2{z, o, mo, o},       Mat2{i, mi, o, mopi},
  };
}

BlockStabilizerReport block_stabilizer_report(const Design& d) {
  const Field& f = d.field;
  const PointSet& pts = *d.points;
  BlockStabilizerReport report;
  const std::uint64_t g_order = group_order(f);
  report.order = g_order / d.b();
  check("|G| divisible by b", 0, g_order % d.b());
  check("|G_T|", d.char5 ? 60 : 12, report.order);

  const auto& t = d.blocks[0].points;
  auto fixes_t = [&](const Mat2& m) {
    std::array<PointIndex, 6> img{};
    for (int k = 0; k < 6; ++k) img[k] = pts.act(m, t[k]);
    std::sort(img.begin(), img.end());
    return img == t;
  };

  if (g_order <= kBruteForceGroupLimit) {
    report.brute_forced = true;
    std::uint64_t count = 0;
    for (const auto& g : enumerate_psl(f)) {
      if (!fixes_t(g.matrix())) continue;
      ++count;
      ++report.element_orders[psl_order(f, g)];
    }
    check("|G_T| (brute force)", report.order, count);
    if (!d.char5 && report.element_orders.count(6))
      throw Error(ErrorKind::CountMismatch, "design", "block stabilizer has an element of order 6");
  }

  if (!d.char5) {
    bool ok = true;
    std::vector<PslElement> seen;
    for (const auto& m : basic_block_stabilizer_reps(f)) {
      if (mat_det(f, m) != f.one() || !fixes_t(m)) {
        ok = false;
        continue;
      }
      seen.push_back(PslElement::make(f, m));
    }
    std::sort(seen.begin(), seen.end());
    ok = ok && std::unique(seen.begin(), seen.end()) == seen.end() && seen.size() == 12;
    report.explicit_reps_verified = ok;
  }
  return report;
}

std::vector<PointPair> pair_orbit(const Design& d, PointPair seed) {
  const auto n = static_cast<std::uint32_t>(d.v());
  std::vector<char> seen(std::size_t{n} * n, 0);
  seed = make_pair_sorted(seed.first, seed.second);
  std::vector<PointPair> orbit{seed};
  seen[key_of(seed, n)] = 1;
  for (std::size_t head = 0; head < orbit.size(); ++head) {
    for (const auto& g : d.generators) {
      PointPair e = make_pair_sorted(g(orbit[head].first), g(orbit[head].second));
      auto& s = seen[key_of(e, n)];
      if (s) continue;
      s = 1;
      orbit.push_back(e);
    }
  }
  return orbit;
}

void write_design(const Design& d, std::ostream& out) {
  out << d.field.q() << ' ' << d.v() << ' ' << d.b() << '\n';
  for (const auto& blk : d.blocks) {
    for (auto x : blk.points) out << x << ' ';
    out << '|';
    for (const auto& e : blk.diagonals) out << ' ' << e.first << '-' << e.second;
    out << '\n';
  }
}

}  // namespace octa
