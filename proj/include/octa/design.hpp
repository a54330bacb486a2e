// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "octa/params.hpp"
#include "octa/pgroup.hpp"

namespace octa {

using PointPair = std::pair<PointIndex, PointIndex>;

inline PointPair make_pair_sorted(PointIndex a, PointIndex b) { return a < b ? PointPair{a, b} : PointPair{b, a}; }

/// An octahedron: six sorted points and its three antipodal pairs.
struct Block {
  std::array<PointIndex, 6> points{};
  std::array<PointPair, 3> diagonals{};

  bool is_diagonal(PointIndex a, PointIndex b) const;
};

/// Sparse co-occurrence counts for unordered pairs sharing at least one block.
class LambdaTable {
 public:
  LambdaTable() = default;
  /// Builds from the raw list of pair keys (one entry per block occurrence).
  static LambdaTable from_occurrences(std::vector<std::uint64_t> keys, std::uint32_t n);

  std::uint32_t at(PointIndex x, PointIndex y) const;
  std::size_t size() const { return keys_.size(); }
  std::uint32_t n() const { return n_; }

  template <typename F>
  void for_each(F&& fn) const {
    for (std::size_t k = 0; k < keys_.size(); ++k)
      fn(static_cast<PointIndex>(keys_[k] / n_), static_cast<PointIndex>(keys_[k] % n_), counts_[k]);
  }

 private:
  std::uint32_t n_ = 0;
  std::vector<std::uint64_t> keys_;  // x * n + y with x < y, sorted
  std::vector<std::uint32_t> counts_;
};

struct Design {
  Field field;
  std::shared_ptr<const PointSet> points;
  std::vector<Perm> generators;  // PSL generator permutations
  std::vector<Block> blocks;
  std::vector<std::vector<std::uint32_t>> point_to_blocks;
  LambdaTable lambda;
  bool char5 = false;
  bool degenerate = false;  // q = 5: a single block

  std::size_t v() const { return points->size(); }
  std::size_t b() const { return blocks.size(); }
  /// Blocks through x; also the lambda value of the pair (x, x).
  std::uint32_t replication(PointIndex x) const { return static_cast<std::uint32_t>(point_to_blocks[x].size()); }
};

Block basic_block(const PointSet& points);

Design build_design(const Field& f);

/// Computes v, b, r, k and lambda from the data and checks them against the
/// closed forms. Throws CountMismatch on any disagreement.
DesignParams verify_counts(const Design& d);

struct EdgeDiagonalCensus {
  std::uint64_t edges = 0;
  std::uint64_t diagonals = 0;
  std::uint32_t blocks_per_edge = 0;
  std::uint32_t blocks_per_diagonal = 0;
};

/// p != 5 only.
EdgeDiagonalCensus edge_diagonal_census(const Design& d);

struct BlockStabilizerReport {
  std::uint64_t order = 0;
  bool brute_forced = false;
  std::map<std::uint64_t, std::uint64_t> element_orders;  // order -> count, when brute forced
  std::optional<bool> explicit_reps_verified;              // p != 5 only
};

inline constexpr std::uint64_t kBruteForceGroupLimit = 50'000;

BlockStabilizerReport block_stabilizer_report(const Design& d);

/// The twelve listed representatives of the basic block's stabilizer (p != 5).
std::vector<Mat2> basic_block_stabilizer_reps(const Field& f);

/// Orbit of one unordered pair under the design's generators.
std::vector<PointPair> pair_orbit(const Design& d, PointPair seed);

/// `q v b` header, then `a b c d e f | x-y x-y x-y` per block.
void write_design(const Design& d, std::ostream& out);

}  // namespace octa
