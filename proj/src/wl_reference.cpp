// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

#include "octa/error.hpp"
#include "octa/wl.hpp"

namespace octa {

PairColoring lambda_coloring(const Design& d) {
  const auto n = static_cast<std::uint32_t>(d.v());
  std::set<std::uint32_t, std::greater<>> values;
  d.lambda.for_each([&](PointIndex, PointIndex, std::uint32_t c) { values.insert(c); });
  if (d.lambda.size() < std::uint64_t{n} * (n - 1) / 2) values.insert(0);
  std::map<std::uint32_t, std::uint32_t> color_of;
  std::uint32_t next = 1;
  for (auto v : values) color_of[v] = next++;

  const std::uint32_t zero_color = color_of.count(0) ? color_of[0] : 0;
  std::vector<std::uint32_t> colors(std::size_t{n} * n, zero_color);
  for (std::uint32_t x = 0; x < n; ++x) colors[std::size_t{x} * n + x] = 0;
  d.lambda.for_each([&](PointIndex x, PointIndex y, std::uint32_t c) {
    colors[std::size_t{x} * n + y] = color_of[c];
    colors[std::size_t{y} * n + x] = color_of[c];
  });
  return PairColoring(n, std::move(colors));
}

PairColoring prepare_coloring(const PairColoring& c) {
  const std::uint32_t n = c.n();
  const std::uint64_t rank = c.num_colors();
  std::unordered_map<std::uint64_t, std::uint32_t> ids;
  std::vector<std::uint32_t> labels(std::size_t{n} * n);
  for (std::uint32_t x = 0; x < n; ++x) {
    for (std::uint32_t y = 0; y < n; ++y) {
      const std::uint64_t key = (std::uint64_t{c.at(x, y)} * 2 + (x == y)) * rank + c.at(y, x);
      auto [it, inserted] = ids.emplace(key, static_cast<std::uint32_t>(ids.size()));
      labels[std::size_t{x} * n + y] = it->second;
    }
  }
  return PairColoring(n, std::move(labels));
}

namespace {

PairColoring reference_round(const PairColoring& c) {
  const std::uint32_t n = c.n();
  using Signature = std::pair<std::uint32_t, std::vector<std::pair<std::uint32_t, std::uint32_t>>>;
  std::map<Signature, std::uint32_t> ids;
  std::vector<std::uint32_t> out(std::size_t{n} * n);
  for (std::uint32_t x = 0; x < n; ++x) {
    for (std::uint32_t y = 0; y < n; ++y) {
      Signature sig{c.at(x, y), {}};
      sig.second.reserve(n);
      for (std::uint32_t z = 0; z < n; ++z) sig.second.emplace_back(c.at(x, z), c.at(z, y));
      std::sort(sig.second.begin(), sig.second.end());
      auto [it, inserted] = ids.emplace(std::move(sig), static_cast<std::uint32_t>(ids.size()));
      out[std::size_t{x} * n + y] = it->second;
    }
  }
  return PairColoring(n, std::move(out));
}

}  // namespace

RefinementTrace wl_stabilize_reference(const PairColoring& input) {
  RefinementTrace trace;
  PairColoring cur = prepare_coloring(input);
  trace.colors_per_round.push_back(cur.num_colors());
  for (;;) {
    PairColoring next = reference_round(cur);
    ++trace.rounds;
    trace.colors_per_round.push_back(next.num_colors());
    const bool stable = next.num_colors() == cur.num_colors();
    cur = std::move(next);
    if (stable) break;
  }
  trace.final_coloring = std::move(cur);
  return trace;
}

std::string_view to_string(SchurianFlag f) {
  return f == SchurianFlag::NonSchurian ? "NonSchurian" : "SchurianConsistent";
}

SchurianFlag schurian_flag(std::uint32_t wl_classes, std::uint32_t full_group_classes) {
  if (wl_classes > full_group_classes)
    throw Error(ErrorKind::RefinementViolation, "wl",
                "WL scheme has " + std::to_string(wl_classes) + " classes, more than the group bound " +
                    std::to_string(full_group_classes));
  return wl_classes < full_group_classes ? SchurianFlag::NonSchurian : SchurianFlag::SchurianConsistent;
}

}  // namespace octa
