// SPDX-License-Identifier: Apache-2.0
#include "octa/analysis.hpp"

namespace octa {

// The printed parameter tuples read (v, b, k, r); they are stored here by name.
const std::vector<PaperRow>& paper_table() {
  static const std::vector<PaperRow> rows = [] {
    auto row = [](std::uint64_t q, std::optional<std::uint32_t> cor, std::optional<std::uint32_t> smallest,
                  std::uint64_t v, std::uint64_t b, std::uint64_t k, std::uint64_t r) {
      PaperRow p;
      p.q = q;
      p.cor_classes = cor;
      p.smallest_classes = smallest;
      p.v = v;
      p.b = b;
      p.k = k;
      p.r = r;
      return p;
    };
    std::vector<PaperRow> t;
    t.push_back(row(9, 3, 3, 20, 30, 6, 9));
    t.push_back(row(13, 5, 5, 42, 91, 6, 13));
    t.push_back(row(17, 7, 7, 72, 204, 6, 17));
    t.push_back(row(25, 7, 3, 156, 130, 6, 5));
    t.back().non_schurian = true;
    t.back().antipodal_drg = true;
    t.back().cover_fold = 6;
    t.back().cover_of = 4;
    t.back().remark = "Non-Schurian. Antipodal distance regular graph of diameter 3, a 6-fold cover of K4.";
    t.push_back(row(29, 13, 13, 210, 1015, 6, 29));
    t.push_back(row(37, 17, 17, 342, 2109, 6, 37));
    t.push_back(row(41, 19, 11, 420, 2870, 6, 41));
    t.back().non_schurian = t.back().non_commutative = true;
    t.back().remark = "Non-Schurian. Non-commutative.";
    t.push_back(row(49, 17, 13, 600, 4900, 6, 49));
    t.back().non_schurian = t.back().non_commutative = true;
    t.back().remark = "Non-Schurian. Non-commutative.";
    t.push_back(row(53, 25, 25, 702, 6201, 6, 53));
    t.push_back(row(61, 29, 29, 930, 9455, 6, 61));
    t.push_back(row(73, 35, 35, 1332, 16206, 6, 73));
    t.push_back(row(81, 13, 5, 1640, 22140, 6, 81));
    t.back().non_schurian = true;
    t.back().remark = "non-Schurian.";
    t.push_back(row(89, 43, 43, 1980, 29370, 6, 89));
    t.push_back(row(97, 47, 47, 2352, 38024, 6, 97));
    t.push_back(row(101, 49, 49, 2550, 42925, 6, 101));
    t.push_back(row(109, 53, 19, 2970, 53955, 6, 109));
    t.back().non_schurian = t.back().non_commutative = true;
    t.back().remark = "Non-Schurian. Non-commutative.";
    t.push_back(row(113, 55, 15, 3192, 60116, 6, 113));
    t.back().non_schurian = t.back().non_commutative = true;
    t.back().remark = "Non-Schurian. Non-commutative.";
    t.push_back(row(121, 39, 21, 3660, 73810, 6, 121));
    t.back().non_schurian = true;
    t.back().remark = "non-Schurian.";
    t.push_back(row(125, std::nullopt, 3, 3906, 16275, 6, 25));
    t.back().non_schurian = true;
    t.back().antipodal_drg = true;
    t.back().cover_fold = 31;
    t.back().cover_of = 4;
    t.back().remark = "non-Schurian. Antipodal distance regular graph of diameter 3, a 31-fold cover of K4.";
    for (std::uint64_t q : {137, 149, 157}) {
      PaperRow blank;
      blank.q = q;
      blank.remark = "no data in the table";
      t.push_back(blank);
    }
    t.push_back(row(169, 47, 7, 7140, 201110, 6, 169));
    t.back().non_schurian = true;
    t.back().remark = "non-Schurian.";
    return t;
  }();
  return rows;
}

std::optional<PaperRow> paper_row(std::uint64_t q) {
  for (const auto& r : paper_table())
    if (r.q == q) return r;
  return std::nullopt;
}

namespace {

void add_cell(std::vector<CellCheck>& out, std::string name, std::uint64_t expected, std::uint64_t got,
              bool known = false) {
  out.push_back(CellCheck{std::move(name), std::to_string(expected), std::to_string(got), expected == got, known});
}

void add_flag(std::vector<CellCheck>& out, std::string name, bool expected, bool got) {
  out.push_back(CellCheck{std::move(name), expected ? "yes" : "no", got ? "yes" : "no", expected == got, false});
}

}  // namespace

std::vector<CellCheck> compare_with_paper(const AnalysisReport& r, const PaperRow& row) {
  std::vector<CellCheck> cells;
  if (row.v) add_cell(cells, "v", *row.v, r.params.v);
  if (row.b) add_cell(cells, "b", *row.b, r.params.b);
  if (row.k) add_cell(cells, "k", *row.k, r.params.k);
  if (row.r) add_cell(cells, "r", *row.r, r.params.r);
  if (row.cor_classes) add_cell(cells, "cor_classes", *row.cor_classes, r.cor_classes);
  if (row.smallest_classes) {
    add_cell(cells, "wl_classes", *row.smallest_classes, r.wl_classes);
    // Rows without a remark are those where both class counts agree.
    add_flag(cells, "non_schurian", row.non_schurian, r.schurian_flag == SchurianFlag::NonSchurian);
  }
  if (row.non_commutative) add_flag(cells, "non_commutative", true, !r.commutative);
  if (row.antipodal_drg) {
    add_flag(cells, "antipodal_drg_diameter_3", true, r.drg && r.drg->antipodal && r.drg->diameter == 3);
    if (row.cover_fold && r.drg) add_cell(cells, "cover_fold", *row.cover_fold, r.drg->antipodal_class_size);
    // The remark's K4 does not fit the vertex count (fold * 4 != v).
    if (row.cover_of && r.drg) add_cell(cells, "cover_of_K", *row.cover_of, r.drg->cover_of, true);
  }
  return cells;
}

bool AnalysisReport::paper_matches() const {
  for (const auto& c : paper_cells)
    if (!c.match && !c.known_discrepancy) return false;
  return true;
}

}  // namespace octa
