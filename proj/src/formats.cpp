// SPDX-License-Identifier: Apache-2.0
#include <istream>
#include <ostream>
#include <string>

#include "octa/error.hpp"
#include "octa/scheme.hpp"

namespace octa {

void write_scheme(const PairColoring& c, std::ostream& out) {
  out << c.n() << ' ' << c.num_colors() << '\n';
  std::string line;
  for (std::uint32_t x = 0; x < c.n(); ++x) {
    line.clear();
    for (std::uint32_t y = 0; y < c.n(); ++y) {
      if (y) line += ' ';
      line += std::to_string(c.at(x, y));
    }
    line += '\n';
    out << line;
  }
}

PairColoring read_scheme(std::istream& in) {
  std::uint64_t n = 0, rank = 0;
  if (!(in >> n >> rank)) throw Error(ErrorKind::BadInput, "scheme", "missing 'n rank' header");
  if (n == 0 || n > 20'000) throw Error(ErrorKind::BadInput, "scheme", "unsupported point count " + std::to_string(n));
  std::vector<std::uint32_t> labels(n * n);
  for (auto& l : labels) {
    std::uint64_t v;
    if (!(in >> v)) throw Error(ErrorKind::BadInput, "scheme", "color matrix is truncated");
    if (v >= rank) throw Error(ErrorKind::BadInput, "scheme", "color " + std::to_string(v) + " exceeds rank");
    l = static_cast<std::uint32_t>(v);
  }
  return PairColoring::canonical(static_cast<std::uint32_t>(n), labels);
}

void write_tensor(const IntersectionTensor& t, std::ostream& out) {
  for (std::uint32_t i = 0; i < t.rank(); ++i)
    for (std::uint32_t j = 0; j < t.rank(); ++j)
      for (std::uint32_t k = 0; k < t.rank(); ++k)
        if (auto v = t.at(i, j, k)) out << i << ' ' << j << ' ' << k << ' ' << v << '\n';
}

}  // namespace octa
