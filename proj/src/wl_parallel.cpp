// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <limits>
#include <span>
#include <unordered_map>

#include "octa/wl.hpp"

namespace octa {

namespace {

constexpr std::uint32_t kUnset = std::numeric_limits<std::uint32_t>::max();

// Dense per-thread counters are used while n * R^2 stays below this.
constexpr std::size_t kDenseCounterLimit = std::size_t{1} << 24;

std::uint64_t hash_words(std::span<const std::uint32_t> words) {
  std::uint64_t h = 0x9e3779b97f4a7c15ull ^ words.size();
  for (auto w : words) {
    h ^= w;
    h *= 0xff51afd7ed558ccdull;
    h ^= h >> 32;
  }
  return h;
}

// Interns variable-length signatures; ids follow insertion order and lookups
// always compare the full signature.
class SignatureTable {
 public:
  std::uint32_t size() const { return static_cast<std::uint32_t>(offsets_.size() - 1); }

  std::span<const std::uint32_t> get(std::uint32_t id) const {
    return {data_.data() + offsets_[id], offsets_[id + 1] - offsets_[id]};
  }

  std::uint32_t intern(std::span<const std::uint32_t> sig) {
    const std::uint64_t h = hash_words(sig);
    auto [it, inserted] = heads_.emplace(h, kUnset);
    for (std::uint32_t id = it->second; id != kUnset; id = chain_[id]) {
      auto s = get(id);
      if (std::equal(s.begin(), s.end(), sig.begin(), sig.end())) return id;
    }
    const std::uint32_t id = size();
    data_.insert(data_.end(), sig.begin(), sig.end());
    offsets_.push_back(static_cast<std::uint32_t>(data_.size()));
    chain_.push_back(it->second);
    it->second = id;
    return id;
  }

  void release() {
    std::vector<std::uint32_t>().swap(data_);
    std::vector<std::uint32_t>{0}.swap(offsets_);
    std::vector<std::uint32_t>().swap(chain_);
    std::unordered_map<std::uint64_t, std::uint32_t>().swap(heads_);
  }

 private:
  std::vector<std::uint32_t> data_;
  std::vector<std::uint32_t> offsets_{0};
  std::vector<std::uint32_t> chain_;
  std::unordered_map<std::uint64_t, std::uint32_t> heads_;
};

}  // namespace

PairColoring wl_refine_round(const PairColoring& c) {
  const std::uint32_t n = c.n();
  const std::uint32_t rank = c.num_colors();
  const std::size_t rr = std::size_t{rank} * rank;
  const bool dense = rr <= 4096 && std::size_t{n} * rr <= kDenseCounterLimit;

  // colcount[y][b] = #{z : c(z,y) = b}; lets each row skip its most frequent color.
  std::vector<std::uint32_t> colcount;
  std::vector<std::uint32_t> transpose(rank, 0);
  if (dense) {
    colcount.assign(std::size_t{n} * rank, 0);
    for (std::uint32_t z = 0; z < n; ++z) {
      auto row = c.row(z);
      for (std::uint32_t y = 0; y < n; ++y) ++colcount[std::size_t{y} * rank + row[y]];
    }
  } else {
    for (std::uint32_t x = 0; x < n; ++x)
      for (std::uint32_t y = 0; y < n; ++y) transpose[c.at(x, y)] = c.at(y, x);
  }

  std::vector<std::uint32_t> local(std::size_t{n} * n);
  std::vector<SignatureTable> row_tables(n);

#pragma omp parallel
  {
    std::vector<std::uint32_t> cnt(dense ? std::size_t{n} * rr : 0);
    std::vector<std::uint32_t> hist(rank);
    std::vector<std::uint32_t> sig;
    std::vector<std::uint64_t> keys;

#pragma omp for schedule(dynamic, 1)
    for (std::int64_t xs = 0; xs < static_cast<std::int64_t>(n); ++xs) {
      const auto x = static_cast<std::uint32_t>(xs);
      const auto row = c.row(x);
      SignatureTable& table = row_tables[x];
      std::uint32_t* out = local.data() + std::size_t{x} * n;

      if (dense) {
        std::fill(hist.begin(), hist.end(), 0);
        for (auto a : row) ++hist[a];
        const auto skip = static_cast<std::uint32_t>(std::max_element(hist.begin(), hist.end()) - hist.begin());

        // cnt layout [a][y][b]
        std::fill(cnt.begin(), cnt.end(), 0);
        for (std::uint32_t z = 0; z < n; ++z) {
          const std::uint32_t a = row[z];
          if (a == skip) continue;
          std::uint32_t* base = cnt.data() + std::size_t{a} * n * rank;
          const std::uint32_t* cz = c.row(z).data();
          for (std::uint32_t y = 0; y < n; ++y) ++base[std::size_t{y} * rank + cz[y]];
        }

        sig.assign(1 + rr, 0);
        for (std::uint32_t y = 0; y < n; ++y) {
          sig[0] = row[y];
          std::uint32_t* skipped = sig.data() + 1 + std::size_t{skip} * rank;
          std::copy_n(colcount.data() + std::size_t{y} * rank, rank, skipped);
          for (std::uint32_t a = 0; a < rank; ++a) {
            if (a == skip) continue;
            const std::uint32_t* src = cnt.data() + (std::size_t{a} * n + y) * rank;
            std::uint32_t* dst = sig.data() + 1 + std::size_t{a} * rank;
            for (std::uint32_t b = 0; b < rank; ++b) {
              dst[b] = src[b];
              skipped[b] -= src[b];
            }
          }
          out[y] = table.intern(sig);
        }
      } else {
        for (std::uint32_t y = 0; y < n; ++y) {
          keys.clear();
          const auto yrow = c.row(y);
          for (std::uint32_t z = 0; z < n; ++z) keys.push_back(std::uint64_t{row[z]} * rank + transpose[yrow[z]]);
          std::sort(keys.begin(), keys.end());
          sig.clear();
          sig.push_back(row[y]);
          for (std::size_t k = 0; k < keys.size();) {
            std::size_t j = k;
            while (j < keys.size() && keys[j] == keys[k]) ++j;
            sig.push_back(static_cast<std::uint32_t>(keys[k] >> 32));
            sig.push_back(static_cast<std::uint32_t>(keys[k]));
            sig.push_back(static_cast<std::uint32_t>(j - k));
            k = j;
          }
          out[y] = table.intern(sig);
        }
      }
    }
  }

  // Sequential merge in row-major order gives first-occurrence numbering.
  SignatureTable global;
  std::vector<std::uint32_t> l2g;
  for (std::uint32_t x = 0; x < n; ++x) {
    l2g.assign(row_tables[x].size(), kUnset);
    std::uint32_t* row = local.data() + std::size_t{x} * n;
    for (std::uint32_t y = 0; y < n; ++y) {
      auto& g = l2g[row[y]];
      if (g == kUnset) g = global.intern(row_tables[x].get(row[y]));
      row[y] = g;
    }
    row_tables[x].release();
  }
  return PairColoring(n, std::move(local));
}

RefinementTrace wl_stabilize(const PairColoring& input) {
  RefinementTrace trace;
  PairColoring cur = prepare_coloring(input);
  trace.colors_per_round.push_back(cur.num_colors());
  for (;;) {
    PairColoring next = wl_refine_round(cur);
    ++trace.rounds;
    trace.colors_per_round.push_back(next.num_colors());
    const bool stable = next.num_colors() == cur.num_colors();
    cur = std::move(next);
    if (stable) break;
  }
  trace.final_coloring = std::move(cur);
  return trace;
}

}  // namespace octa
