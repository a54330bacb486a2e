// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "octa/analysis.hpp"

namespace octa {

enum class Format { Json, Tsv, Text };

Format parse_format(const std::string& s);

struct TableRow {
  std::uint64_t q = 0;
  std::optional<AnalysisReport> report;
  std::string status = "ok";  // "ok", "skipped" or an error kind
  std::string message;
};

std::string render_report(const AnalysisReport& r, Format fmt, bool timings);
std::string render_table(const std::vector<TableRow>& rows, Format fmt, bool expected, bool timings);
std::string render_checks(std::uint64_t q, const std::vector<CheckResult>& checks, Format fmt);

struct WlSummary {
  std::uint32_t n = 0;
  std::uint32_t input_colors = 0;
  RefinementTrace trace;
  SchemeProps props;
  std::optional<DrgResult> drg;
};

std::string render_wl(const WlSummary& s, Format fmt);

}  // namespace octa
