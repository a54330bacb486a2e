// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <omp.h>

#include <numeric>
#include <random>

#include "octa/error.hpp"
#include "octa/wl.hpp"

using namespace octa;

namespace {

Design make(std::uint32_t p, std::uint32_t a) { return build_design(Field::create(p, a)); }

PairColoring graph_coloring(std::uint32_t n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::uint32_t> c(n * n, 2);
  for (std::uint32_t x = 0; x < n; ++x) c[x * n + x] = 0;
  for (auto [a, b] : edges) c[a * n + b] = c[b * n + a] = 1;
  return PairColoring::canonical(n, c);
}

// Every permutation of the points that preserves the coloring.
std::vector<Perm> automorphisms(const PairColoring& c) {
  const std::uint32_t n = c.n();
  std::vector<PointIndex> p(n);
  std::iota(p.begin(), p.end(), 0u);
  std::vector<Perm> out;
  do {
    bool ok = true;
    for (std::uint32_t x = 0; x < n && ok; ++x)
      for (std::uint32_t y = 0; y < n && ok; ++y) ok = c.at(x, y) == c.at(p[x], p[y]);
    if (ok) out.emplace_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

bool coherent(const PairColoring& c) {
  try {
    intersection_tensor(c, CheckLevel::Full);
    return true;
  } catch (const Error&) {
    return false;
  }
}

constexpr double kMergeBudget = 20000;

double bell(std::uint32_t n) {
  std::vector<std::vector<double>> t(n + 1, std::vector<double>(n + 1, 0));
  t[0][0] = 1;
  for (std::uint32_t i = 1; i <= n; ++i) {
    t[i][0] = t[i - 1][i - 1];
    for (std::uint32_t j = 1; j <= i; ++j) t[i][j] = t[i][j - 1] + t[i - 1][j - 1];
  }
  return t[n][0];
}

// All coherent merges of the automorphism orbitals that still refine the input,
// or nullopt when there are too many candidates to enumerate.
// The coarsest coherent refinement is refined by the orbitals, so it is among them.
std::optional<std::vector<PairColoring>> coherent_merges(const PairColoring& input) {
  const PairColoring orb = orbital_coloring(automorphisms(input), input.n());
  const std::uint32_t k = orb.num_colors();
  std::vector<std::uint32_t> parent_color(k);
  for (std::size_t cell = 0; cell < orb.data().size(); ++cell) parent_color[orb.data()[cell]] = input.data()[cell];
  std::vector<std::uint32_t> bucket(input.num_colors(), 0);
  for (auto c : parent_color) ++bucket[c];
  double candidates = 1;
  for (auto b : bucket) candidates *= bell(b);
  if (candidates > kMergeBudget) return std::nullopt;

  std::vector<PairColoring> out;
  std::vector<std::uint32_t> block(k);
  // restricted growth strings, blocks only within one input color
  std::function<void(std::uint32_t, std::uint32_t)> rec = [&](std::uint32_t i, std::uint32_t used) {
    if (i == k) {
      std::vector<std::uint32_t> labels(orb.data().size());
      for (std::size_t cell = 0; cell < labels.size(); ++cell) labels[cell] = block[orb.data()[cell]];
      PairColoring cand = PairColoring::canonical(orb.n(), labels);
      if (coherent(cand)) out.push_back(std::move(cand));
      return;
    }
    for (std::uint32_t b = 0; b <= used; ++b) {
      if (b < used) {
        std::uint32_t first = 0;
        while (block[first] != b) ++first;
        if (parent_color[first] != parent_color[i]) continue;
      }
      block[i] = b;
      rec(i + 1, std::max(used, b + 1));
    }
  };
  rec(0, 0);
  return out;
}

}  // namespace

TEST(LambdaColoring, InitialColors) {
  EXPECT_EQ(lambda_coloring(make(13, 1)).num_colors(), 4u);
  EXPECT_EQ(lambda_coloring(make(5, 2)).num_colors(), 3u);
  EXPECT_EQ(lambda_coloring(make(5, 1)).num_colors(), 2u);
  const PairColoring c = lambda_coloring(make(13, 1));
  EXPECT_EQ(c.at(0, 0), 0u);
}

TEST(Wl, PaperClassCounts) {
  for (auto [p, a, classes] : {std::tuple{3u, 2u, 3u}, {13u, 1u, 5u}, {17u, 1u, 7u}, {5u, 2u, 3u}, {29u, 1u, 13u}}) {
    const auto t = wl_stabilize(lambda_coloring(make(p, a)));
    EXPECT_EQ(t.final_coloring.num_colors() - 1, classes) << "q=" << Field::create(p, a).q();
  }
}

TEST(Wl, ParallelMatchesReference) {
  for (auto [p, a] : {std::pair{5u, 1u}, {3u, 2u}, {13u, 1u}, {17u, 1u}, {5u, 2u}}) {
    const auto input = lambda_coloring(make(p, a));
    const auto par = wl_stabilize(input);
    const auto ref = wl_stabilize_reference(input);
    EXPECT_EQ(par.final_coloring, ref.final_coloring);
    EXPECT_EQ(par.colors_per_round, ref.colors_per_round);
    EXPECT_EQ(par.rounds, ref.rounds);
  }
}

TEST(Wl, ParallelMatchesReferenceOnRandomColorings) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    const std::uint32_t n = 5 + rng() % 20;
    const std::uint32_t colors = 2 + rng() % 4;
    std::vector<std::uint32_t> labels(n * n);
    for (auto& l : labels) l = rng() % colors;
    const auto c = PairColoring::canonical(n, labels);
    const auto par = wl_stabilize(c);
    const auto ref = wl_stabilize_reference(c);
    EXPECT_EQ(par.final_coloring, ref.final_coloring);
    EXPECT_EQ(par.colors_per_round, ref.colors_per_round);
  }
}

TEST(Wl, SparsePathMatchesReference) {
  // many input colors force the sorted-key path
  std::mt19937 rng(11);
  const std::uint32_t n = 30;
  std::vector<std::uint32_t> labels(n * n);
  for (auto& l : labels) l = rng() % 80;
  const auto c = PairColoring::canonical(n, labels);
  EXPECT_EQ(wl_stabilize(c).final_coloring, wl_stabilize_reference(c).final_coloring);
}

TEST(Wl, ThreadCountDoesNotChangeOutput) {
  const auto input = lambda_coloring(make(29, 1));
  omp_set_num_threads(1);
  const auto one = wl_stabilize(input);
  omp_set_num_threads(4);
  const auto four = wl_stabilize(input);
  omp_set_num_threads(omp_get_num_procs());
  EXPECT_EQ(one.final_coloring, four.final_coloring);
}

TEST(Wl, FixpointAndMonotone) {
  for (auto [p, a] : {std::pair{13u, 1u}, {17u, 1u}, {5u, 2u}}) {
    const auto input = lambda_coloring(make(p, a));
    const auto t = wl_stabilize(input);
    EXPECT_TRUE(std::is_sorted(t.colors_per_round.begin(), t.colors_per_round.end()));
    EXPECT_TRUE(refines(t.final_coloring, input));
    EXPECT_TRUE(t.final_coloring.is_canonical());
    const auto again = wl_stabilize(t.final_coloring);
    EXPECT_EQ(again.final_coloring, t.final_coloring);
    EXPECT_EQ(again.rounds, 1u);
    EXPECT_EQ(wl_refine_round(t.final_coloring), t.final_coloring);
  }
}

TEST(Wl, OutputIsCoherentAndRefinedByFullGroup) {
  for (auto [p, a] : {std::pair{3u, 2u}, {13u, 1u}, {5u, 2u}, {17u, 1u}}) {
    const Design d = make(p, a);
    const auto t = wl_stabilize(lambda_coloring(d));
    EXPECT_NO_THROW(intersection_tensor(t.final_coloring, CheckLevel::Full));
    EXPECT_TRUE(refines(full_group_coloring(*d.points), t.final_coloring));
    EXPECT_NO_THROW(gpbibd_check(d, t.final_coloring));
  }
}

TEST(Wl, CoarsestCoherentRefinementOnSmallGraphs) {
  const std::vector<std::pair<std::uint32_t, std::vector<std::pair<int, int>>>> graphs = {
      {4, {{0, 1}, {1, 2}, {2, 3}}},
      {4, {{0, 1}, {0, 2}, {0, 3}}},
      {5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}}},
      {5, {{0, 1}, {1, 2}, {2, 0}, {3, 4}}},
      {6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}}},
      {6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {0, 3}}},
      {5, {{0, 1}, {0, 2}, {1, 3}}},
      {6, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 5}}},
  };
  std::size_t checked = 0;
  for (const auto& [n, edges] : graphs) {
    const auto input = graph_coloring(n, edges);
    const auto wl = wl_stabilize(input).final_coloring;
    const auto merges = coherent_merges(input);
    if (!merges) continue;
    ++checked;
    ASSERT_FALSE(merges->empty());
    bool found = false;
    for (const auto& m : *merges) {
      EXPECT_TRUE(refines(m, wl));
      found |= m == wl;
    }
    EXPECT_TRUE(found) << "n=" << n << " edges=" << edges.size();
  }
  EXPECT_GE(checked, graphs.size() - 2);
}

TEST(Wl, PrepareSplitsDiagonalAndTranspose) {
  const PairColoring c(3, {0, 0, 0, 1, 0, 0, 1, 1, 0});
  const auto prepared = prepare_coloring(c);
  EXPECT_NE(prepared.at(0, 0), prepared.at(0, 1));
  EXPECT_NE(prepared.at(0, 1), prepared.at(1, 0));
}

TEST(SchurianFlag, Classification) {
  EXPECT_EQ(schurian_flag(3, 7), SchurianFlag::NonSchurian);
  EXPECT_EQ(schurian_flag(5, 5), SchurianFlag::SchurianConsistent);
  EXPECT_EQ(schurian_flag(5, 13), SchurianFlag::NonSchurian);
  EXPECT_THROW(schurian_flag(8, 7), Error);
}
