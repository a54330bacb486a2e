// SPDX-License-Identifier: Apache-2.0
#include "octa/scheme.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "octa/error.hpp"

namespace octa {

namespace {

constexpr std::uint32_t kUnset = std::numeric_limits<std::uint32_t>::max();

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  // The smaller index becomes the root, so roots are first occurrences.
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a < b)
      parent_[b] = a;
    else
      parent_[a] = b;
  }

 private:
  std::vector<std::size_t> parent_;
};

[[noreturn]] void not_coherent(const std::string& what) { throw Error(ErrorKind::NotCoherent, "scheme", what); }

std::string pair_str(std::uint32_t x, std::uint32_t y) {
  return "(" + std::to_string(x) + "," + std::to_string(y) + ")";
}

}  // namespace

PairColoring::PairColoring(std::uint32_t n, std::vector<std::uint32_t> colors)
    : n_(n), colors_(std::move(colors)) {
  if (colors_.size() != std::size_t{n} * n) throw Error(ErrorKind::BadInput, "scheme", "color matrix is not n x n");
  std::uint32_t max = 0;
  for (auto c : colors_) max = std::max(max, c);
  num_colors_ = colors_.empty() ? 0 : max + 1;
  std::vector<char> used(num_colors_, 0);
  for (auto c : colors_) used[c] = 1;
  if (std::find(used.begin(), used.end(), 0) != used.end())
    throw Error(ErrorKind::BadInput, "scheme", "color ids must be contiguous");
}

PairColoring PairColoring::canonical(std::uint32_t n, std::span<const std::uint32_t> labels) {
  std::vector<std::uint32_t> out(labels.size());
  std::vector<std::uint32_t> map;
  std::uint32_t next = 0;
  for (std::size_t k = 0; k < labels.size(); ++k) {
    const std::uint32_t l = labels[k];
    if (l >= map.size()) map.resize(std::size_t{l} + 1, kUnset);
    if (map[l] == kUnset) map[l] = next++;
    out[k] = map[l];
  }
  return PairColoring(n, std::move(out));
}

bool PairColoring::is_canonical() const {
  std::uint32_t next = 0;
  for (auto c : colors_) {
    if (c > next) return false;
    if (c == next) ++next;
  }
  return true;
}

bool refines(const PairColoring& fine, const PairColoring& coarse) {
  if (fine.n() != coarse.n()) return false;
  std::vector<std::uint32_t> image(fine.num_colors(), kUnset);
  for (std::size_t k = 0; k < fine.data().size(); ++k) {
    auto& m = image[fine.data()[k]];
    if (m == kUnset)
      m = coarse.data()[k];
    else if (m != coarse.data()[k])
      return false;
  }
  return true;
}

PairColoring orbital_coloring(std::span<const Perm> gens, std::uint32_t n) {
  const std::size_t cells = std::size_t{n} * n;
  UnionFind uf(cells);
  for (const auto& g : gens) {
    if (g.size() != n) throw Error(ErrorKind::BadInput, "scheme", "generator degree mismatch");
    for (std::uint32_t x = 0; x < n; ++x) {
      const std::size_t gx = std::size_t{g(x)} * n;
      for (std::uint32_t y = 0; y < n; ++y) uf.unite(std::size_t{x} * n + y, gx + g(y));
    }
  }
  std::vector<std::uint32_t> root(cells);
  for (std::size_t k = 0; k < cells; ++k) root[k] = static_cast<std::uint32_t>(uf.find(k));
  // Roots are first occurrences; canonical() compacts them in row-major order.
  std::vector<std::uint32_t> dense(cells, kUnset);
  std::uint32_t next = 0;
  for (std::size_t k = 0; k < cells; ++k) {
    auto& d = dense[root[k]];
    if (d == kUnset) d = next++;
    root[k] = d;
  }
  return PairColoring(n, std::move(root));
}

PairColoring full_group_coloring(const PointSet& points) {
  std::vector<Perm> gens = psl_generator_perms(points);
  gens.push_back(frobenius_perm(points));
  gens.push_back(sigma_perm(points));
  return orbital_coloring(gens, static_cast<std::uint32_t>(points.size()));
}

CheckLevel default_check_level(std::uint32_t n) {
  return n <= kFullCheckMaxPoints ? CheckLevel::Full : CheckLevel::Sampled;
}

CoherentConfig intersection_tensor(const PairColoring& c, CheckLevel level) {
  const std::uint32_t n = c.n(), rank = c.num_colors();
  if (rank > 1024) throw Error(ErrorKind::ResourceLimit, "scheme", "rank too large for a dense tensor");
  CoherentConfig cc{c, {}, std::vector<std::uint32_t>(rank, kUnset), std::vector<std::uint64_t>(rank, 0), std::nullopt};

  std::vector<char> is_diag(rank, 0), is_off(rank, 0);
  for (std::uint32_t x = 0; x < n; ++x)
    for (std::uint32_t y = 0; y < n; ++y) (x == y ? is_diag : is_off)[c.at(x, y)] = 1;
  for (std::uint32_t k = 0; k < rank; ++k) {
    if (is_diag[k] && is_off[k]) not_coherent("color " + std::to_string(k) + " meets the diagonal and off-diagonal");
    if (is_diag[k]) cc.diagonal_colors.push_back(k);
  }
  for (std::uint32_t x = 0; x < n; ++x) {
    for (std::uint32_t y = 0; y < n; ++y) {
      auto& t = cc.transpose[c.at(x, y)];
      if (t == kUnset)
        t = c.at(y, x);
      else if (t != c.at(y, x))
        not_coherent("transpose of color " + std::to_string(c.at(x, y)) + " is not a color, witness " + pair_str(y, x));
    }
  }

  // Representatives: first row-major occurrence of each color.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> rep(rank, {kUnset, kUnset});
  for (std::uint32_t x = 0; x < n; ++x)
    for (std::uint32_t y = 0; y < n; ++y)
      if (rep[c.at(x, y)].first == kUnset) rep[c.at(x, y)] = {x, y};

  for (std::uint32_t k = 0; k < rank; ++k)
    for (auto col : c.row(rep[k].first))
      if (col == k) ++cc.valency[k];

  IntersectionTensor tensor(rank);
  for (std::uint32_t k = 0; k < rank; ++k) {
    const auto [x, z] = rep[k];
    for (std::uint32_t y = 0; y < n; ++y) ++tensor.at(c.at(x, y), c.at(y, z), k);
  }

  // Recount on other pairs; report the first failing pair in row-major order.
  auto recount_matches = [&](std::uint32_t x, std::uint32_t z, std::vector<std::uint32_t>& scratch) {
    const std::uint32_t k = c.at(x, z);
    std::fill(scratch.begin(), scratch.end(), 0);
    for (std::uint32_t y = 0; y < n; ++y) ++scratch[std::size_t{c.at(x, y)} * rank + c.at(y, z)];
    for (std::uint32_t i = 0; i < rank; ++i)
      for (std::uint32_t j = 0; j < rank; ++j)
        if (scratch[std::size_t{i} * rank + j] != tensor.at(i, j, k)) return false;
    return true;
  };

  std::uint64_t first_bad = std::numeric_limits<std::uint64_t>::max();
  if (level == CheckLevel::Full) {
#pragma omp parallel
    {
      std::vector<std::uint32_t> scratch(std::size_t{rank} * rank);
      std::uint64_t local_bad = std::numeric_limits<std::uint64_t>::max();
#pragma omp for schedule(dynamic, 4)
      for (std::int64_t xs = 0; xs < static_cast<std::int64_t>(n); ++xs) {
        const auto x = static_cast<std::uint32_t>(xs);
        for (std::uint32_t z = 0; z < n; ++z) {
          if (!recount_matches(x, z, scratch)) {
            local_bad = std::min(local_bad, std::uint64_t{x} * n + z);
            break;
          }
        }
      }
#pragma omp critical
      first_bad = std::min(first_bad, local_bad);
    }
  } else {
    std::vector<std::uint32_t> scratch(std::size_t{rank} * rank);
    for (std::uint32_t k = 0; k < rank && first_bad == std::numeric_limits<std::uint64_t>::max(); ++k) {
      int checked = 0;
      for (std::uint32_t j = 0; j < n && checked < 5; ++j) {
        const std::uint32_t x = static_cast<std::uint32_t>((std::uint64_t{j} * 7919 + std::uint64_t{k} * 31) % n);
        auto row = c.row(x);
        auto it = std::find(row.begin(), row.end(), k);
        if (it == row.end()) continue;
        const auto z = static_cast<std::uint32_t>(it - row.begin());
        ++checked;
        if (!recount_matches(x, z, scratch)) {
          first_bad = std::uint64_t{x} * n + z;
          break;
        }
      }
    }
  }
  if (first_bad != std::numeric_limits<std::uint64_t>::max()) {
    const auto x = static_cast<std::uint32_t>(first_bad / n), z = static_cast<std::uint32_t>(first_bad % n);
    const std::uint32_t k = c.at(x, z);
    not_coherent("intersection numbers of color " + std::to_string(k) + " differ between " +
                 pair_str(rep[k].first, rep[k].second) + " and " + pair_str(x, z));
  }
  cc.tensor = std::move(tensor);
  return cc;
}

SchemeProps check_props(const CoherentConfig& cc) {
  if (!cc.tensor) throw Error(ErrorKind::BadInput, "scheme", "check_props needs the intersection tensor");
  const auto& t = *cc.tensor;
  const std::uint32_t rank = cc.rank();
  SchemeProps props;
  props.rank = rank;
  props.homogeneous = cc.diagonal_colors.size() == 1;
  props.classes = rank - static_cast<std::uint32_t>(cc.diagonal_colors.size());
  props.symmetric = true;
  for (std::uint32_t k = 0; k < rank; ++k) props.symmetric = props.symmetric && cc.transpose[k] == k;
  props.commutative = true;
  for (std::uint32_t k = 0; k < rank && props.commutative; ++k)
    for (std::uint32_t i = 0; i < rank && props.commutative; ++i)
      for (std::uint32_t j = i + 1; j < rank; ++j)
        if (t.at(i, j, k) != t.at(j, i, k)) {
          props.commutative = false;
          break;
        }
  if (props.symmetric && !props.commutative) not_coherent("symmetric configuration is not commutative");
  return props;
}

std::vector<std::uint32_t> gpbibd_check(const Design& d, const PairColoring& c) {
  const auto n = static_cast<std::uint32_t>(d.v());
  if (c.n() != n) throw Error(ErrorKind::BadInput, "scheme", "coloring and design differ in size");
  std::vector<std::uint32_t> lam(std::size_t{n} * n, 0);
  d.lambda.for_each([&](PointIndex x, PointIndex y, std::uint32_t cnt) {
    lam[std::size_t{x} * n + y] = cnt;
    lam[std::size_t{y} * n + x] = cnt;
  });
  for (std::uint32_t x = 0; x < n; ++x) lam[std::size_t{x} * n + x] = d.replication(x);

  std::vector<std::uint32_t> value(c.num_colors(), kUnset);
  for (std::size_t k = 0; k < lam.size(); ++k) {
    auto& v = value[c.data()[k]];
    if (v == kUnset)
      v = lam[k];
    else if (v != lam[k])
      throw Error(ErrorKind::NotEquitable, "scheme",
                  "color " + std::to_string(c.data()[k]) + " carries lambda values " + std::to_string(v) + " and " +
                      std::to_string(lam[k]));
  }
  for (std::uint32_t x = 0; x < n; ++x)
    for (std::uint32_t y = 0; y < n; ++y)
      if (value[c.at(x, y)] != value[c.at(y, x)])
        throw Error(ErrorKind::NotEquitable, "scheme", "inverse classes carry different lambda values");
  return value;
}

std::optional<DrgResult> drg_analysis(const CoherentConfig& cc) {
  if (!cc.tensor || cc.diagonal_colors.size() != 1 || cc.rank() != 4) return std::nullopt;
  for (std::uint32_t k = 0; k < cc.rank(); ++k)
    if (cc.transpose[k] != k) return std::nullopt;
  const auto& t = *cc.tensor;
  const std::uint32_t id = cc.diagonal_colors[0];

  for (std::uint32_t rel = 0; rel < cc.rank(); ++rel) {
    if (rel == id) continue;
    std::vector<std::uint32_t> dist{id, rel};
    std::vector<char> reached(cc.rank(), 0);
    reached[id] = reached[rel] = 1;
    bool metric = true;
    while (dist.size() < cc.rank() && metric) {
      std::vector<std::uint32_t> next;
      for (std::uint32_t k = 0; k < cc.rank(); ++k)
        if (!reached[k] && t.at(dist.back(), rel, k) > 0) next.push_back(k);
      if (next.size() != 1) {
        metric = false;
        break;
      }
      reached[next[0]] = 1;
      dist.push_back(next[0]);
    }
    if (!metric) continue;
    // A_j A_R may only involve A_{j-1}, A_j, A_{j+1}
    for (int j = 0; j < 4 && metric; ++j)
      for (int k = 0; k < 4; ++k)
        if (std::abs(j - k) > 1 && t.at(dist[j], rel, dist[k]) > 0) metric = false;
    if (!metric) continue;

    DrgResult r;
    r.relation = rel;
    r.diameter = 3;
    std::copy(dist.begin(), dist.end(), r.distance_colors.begin());
    for (int j = 0; j < 3; ++j) r.intersection_array[j] = t.at(dist[j + 1], rel, dist[j]);
    for (int j = 1; j <= 3; ++j) r.intersection_array[2 + j] = t.at(dist[j - 1], rel, dist[j]);
    const std::uint32_t far = dist[3];
    r.antipodal = true;
    for (std::uint32_t k = 0; k < cc.rank(); ++k)
      if (k != id && k != far && t.at(far, far, k) > 0) r.antipodal = false;
    r.antipodal_class_size = 1 + cc.valency[far];
    r.cover_of = cc.coloring.n() / r.antipodal_class_size;
    return r;
  }
  return std::nullopt;
}

}  // namespace octa
