// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "octa/params.hpp"
#include "octa/scheme.hpp"
#include "octa/wl.hpp"

namespace octa {

struct AnalyzeOptions {
  std::optional<std::string> modulus;    // "p alpha c0 ... c_alpha"
  std::optional<std::string> generator;  // "c0 ... c_{alpha-1}"
  std::uint32_t max_points = 2000;
  bool force = false;
  std::optional<CheckLevel> check_level;  // default: Full up to kFullCheckMaxPoints
  std::optional<std::string> dump_design;
  std::optional<std::string> dump_scheme;
  bool drg = true;
};

/// One row of the published table, with the (v,b,k,r) column order already corrected.
struct PaperRow {
  std::uint64_t q = 0;
  std::optional<std::uint64_t> v, b, k, r;
  std::optional<std::uint32_t> cor_classes;
  std::optional<std::uint32_t> smallest_classes;
  bool non_schurian = false;
  bool non_commutative = false;
  bool antipodal_drg = false;
  std::optional<std::uint64_t> cover_fold;  // "N-fold cover" in the remark
  std::optional<std::uint64_t> cover_of;    // "cover of K_m" in the remark
  std::string remark;
};

const std::vector<PaperRow>& paper_table();
std::optional<PaperRow> paper_row(std::uint64_t q);

struct CellCheck {
  std::string name;
  std::string expected;
  std::string got;
  bool match = false;
  bool known_discrepancy = false;  // mismatch recorded as a transcription issue in the source table
};

struct AnalysisReport {
  std::uint64_t q = 0, p = 0, alpha = 0;
  std::vector<std::uint32_t> modulus;
  std::vector<std::uint32_t> omega;
  DesignParams params;
  std::uint32_t schurian_classes = 0;  // PSL orbital scheme
  bool psl_commutative = false;
  bool psl_symmetric = false;
  std::uint64_t frobenius_orbits = 0;  // |P/F|
  std::uint32_t cor_classes = 0;       // 2|P/F| - 1
  std::uint32_t full_group_classes = 0;
  std::uint32_t wl_classes = 0;
  std::uint32_t wl_rounds = 0;
  std::vector<std::uint32_t> wl_colors_per_round;
  std::vector<std::uint32_t> wl_valencies;
  std::vector<std::uint32_t> wl_lambda;  // lambda carried by each WL color
  SchurianFlag schurian_flag = SchurianFlag::SchurianConsistent;
  bool commutative = false;
  bool symmetric = false;
  bool degenerate = false;
  CheckLevel check_level = CheckLevel::Full;
  std::optional<DrgResult> drg;
  std::vector<std::pair<std::string, double>> timings_ms;
  std::vector<CellCheck> paper_cells;  // empty when the table has no row for q
  bool paper_row_present = false;

  bool paper_matches() const;
};

/// Runs field, design, verification, both orbital schemes, the lambda
/// partition, WL stabilization and the DRG test for one q.
AnalysisReport analyze(std::uint64_t q, const AnalyzeOptions& options);

/// (p, alpha) for an admissible q, else throws BadCongruence / BadInput.
std::pair<std::uint32_t, std::uint32_t> admissible_q(std::uint64_t q);

/// The field for q with any --modulus / --generator overrides applied.
Field make_field(std::uint64_t q, const AnalyzeOptions& options);

std::vector<CellCheck> compare_with_paper(const AnalysisReport& r, const PaperRow& row);

struct CheckResult {
  std::string module;
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Every invariant that is feasible at this size, grouped by module.
std::vector<CheckResult> verify_all(std::uint64_t q, const AnalyzeOptions& options);

}  // namespace octa
