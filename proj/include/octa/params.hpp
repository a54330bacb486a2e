// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <map>
#include <string_view>

namespace octa {

enum class PairClass { Identity, Edge, Diagonal, Adjacent, Null };

std::string_view to_string(PairClass c);

/// Design parameters, always carried as labelled fields.
struct DesignParams {
  std::uint64_t v = 0, b = 0, r = 0, k = 0;
  std::map<PairClass, std::uint32_t> lambda_values;
  std::uint64_t m = 0;  // associate classes of the PSL orbital scheme
  bool char5 = false;

  friend bool operator==(const DesignParams&, const DesignParams&) = default;
};

}  // namespace octa
