// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "octa/design.hpp"
#include "octa/pgroup.hpp"

namespace octa {

/// A colouring of X x X, stored densely row by row.
class PairColoring {
 public:
  PairColoring() = default;
  /// Colors must be exactly 0..k-1 with every value used.
  PairColoring(std::uint32_t n, std::vector<std::uint32_t> colors);

  /// Renumbers arbitrary labels by first row-major occurrence.
  static PairColoring canonical(std::uint32_t n, std::span<const std::uint32_t> labels);

  std::uint32_t n() const { return n_; }
  std::uint32_t num_colors() const { return num_colors_; }
  std::uint32_t at(std::uint32_t x, std::uint32_t y) const { return colors_[std::size_t{x} * n_ + y]; }
  std::span<const std::uint32_t> row(std::uint32_t x) const {
    return {colors_.data() + std::size_t{x} * n_, n_};
  }
  const std::vector<std::uint32_t>& data() const { return colors_; }
  bool is_canonical() const;

  friend bool operator==(const PairColoring&, const PairColoring&) = default;

 private:
  std::uint32_t n_ = 0;
  std::uint32_t num_colors_ = 0;
  std::vector<std::uint32_t> colors_;
};

/// Whether every class of `fine` lies inside a single class of `coarse`.
bool refines(const PairColoring& fine, const PairColoring& coarse);

/// Orbits of the generated group on ordered pairs, by union-find over the n^2 cells.
PairColoring orbital_coloring(std::span<const Perm> gens, std::uint32_t n);

/// Orbitals of PSL(2,q) extended by the Frobenius map and the extra rotation.
PairColoring full_group_coloring(const PointSet& points);

class IntersectionTensor {
 public:
  explicit IntersectionTensor(std::uint32_t rank) : rank_(rank), data_(std::size_t{rank} * rank * rank, 0) {}

  std::uint32_t rank() const { return rank_; }
  /// p_ij^k
  std::uint32_t at(std::uint32_t i, std::uint32_t j, std::uint32_t k) const { return data_[index(i, j, k)]; }
  std::uint32_t& at(std::uint32_t i, std::uint32_t j, std::uint32_t k) { return data_[index(i, j, k)]; }

 private:
  std::size_t index(std::uint32_t i, std::uint32_t j, std::uint32_t k) const {
    return (std::size_t{k} * rank_ + i) * rank_ + j;
  }
  std::uint32_t rank_;
  std::vector<std::uint32_t> data_;
};

enum class CheckLevel { Full, Sampled };

/// Largest point count for which the default check level is Full.
inline constexpr std::uint32_t kFullCheckMaxPoints = 720;

CheckLevel default_check_level(std::uint32_t n);

struct CoherentConfig {
  PairColoring coloring;
  std::vector<std::uint32_t> diagonal_colors;
  std::vector<std::uint32_t> transpose;
  std::vector<std::uint64_t> valency;  // out-degree of each color within its fibre
  std::optional<IntersectionTensor> tensor;

  std::uint32_t rank() const { return coloring.num_colors(); }
};

/// Computes p_ij^k from one representative per color and re-counts it on other
/// pairs: every pair in Full mode, six representatives per color in Sampled mode.
/// Throws NotCoherent with a witness when a count is not well defined.
CoherentConfig intersection_tensor(const PairColoring& c, CheckLevel level);

struct SchemeProps {
  bool homogeneous = false;
  bool symmetric = false;
  bool commutative = false;
  std::uint32_t rank = 0;
  std::uint32_t classes = 0;
};

SchemeProps check_props(const CoherentConfig& cc);

/// Lambda value carried by each color; the diagonal color carries r.
/// Throws NotEquitable if some color sees two lambda values.
std::vector<std::uint32_t> gpbibd_check(const Design& d, const PairColoring& c);

struct DrgResult {
  std::uint32_t relation = 0;  // color generating the metric structure
  std::uint32_t diameter = 0;
  std::array<std::uint64_t, 6> intersection_array{};  // {b0,b1,b2; c1,c2,c3}
  std::array<std::uint32_t, 4> distance_colors{};
  bool antipodal = false;
  std::uint64_t antipodal_class_size = 0;  // 1 + k_3
  std::uint64_t cover_of = 0;              // n / antipodal_class_size
};

/// Distance-regular structure of a homogeneous symmetric 3-class scheme, if
/// one of its relations generates it as a metric scheme.
std::optional<DrgResult> drg_analysis(const CoherentConfig& cc);

/// `n rank` header then the color matrix, one row per line.
void write_scheme(const PairColoring& c, std::ostream& out);
PairColoring read_scheme(std::istream& in);
/// Nonzero intersection numbers as `i j k p` lines.
void write_tensor(const IntersectionTensor& t, std::ostream& out);

}  // namespace octa
