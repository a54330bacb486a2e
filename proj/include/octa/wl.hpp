// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "octa/design.hpp"
#include "octa/scheme.hpp"

namespace octa {

/// colors_per_round[0] is the prepared input; each refinement round appends one
/// entry and the loop stops on the first repeat.
struct RefinementTrace {
  std::uint32_t rounds = 0;
  std::vector<std::uint32_t> colors_per_round;
  PairColoring final_coloring;
};

/// Identity pairs get color 0; remaining colors follow decreasing lambda, 0 included.
PairColoring lambda_coloring(const Design& d);

/// Splits colors by (c(x,y), x == y, c(y,x)), the coarsest refinement that
/// separates the diagonal and is closed under transposition.
PairColoring prepare_coloring(const PairColoring& c);

/// 2-dimensional Weisfeiler-Leman stabilization. Rows are refined in parallel
/// with OpenMP; output is independent of the thread count.
RefinementTrace wl_stabilize(const PairColoring& c);

/// Single-threaded reference with the textbook multiset update, kept for
/// cross-checking the parallel kernel.
RefinementTrace wl_stabilize_reference(const PairColoring& c);

/// One refinement round of the parallel kernel on a prepared coloring.
PairColoring wl_refine_round(const PairColoring& c);

enum class SchurianFlag { SchurianConsistent, NonSchurian };

std::string_view to_string(SchurianFlag f);

/// NonSchurian when the WL scheme has fewer classes than the largest known
/// automorphism group's orbital scheme. More classes is a RefinementViolation.
SchurianFlag schurian_flag(std::uint32_t wl_classes, std::uint32_t full_group_classes);

}  // namespace octa
