// SPDX-License-Identifier: Apache-2.0
#include "octa/render.hpp"

#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "octa/error.hpp"

namespace octa {

using Json = nlohmann::ordered_json;

namespace {

std::string join(const std::vector<std::uint32_t>& v, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(v[i]);
  }
  return out;
}

std::string intersection_array_string(const DrgResult& d) {
  const auto& a = d.intersection_array;
  std::ostringstream s;
  s << "{" << a[0] << "," << a[1] << "," << a[2] << ";" << a[3] << "," << a[4] << "," << a[5] << "}";
  return s.str();
}

Json drg_json(const std::optional<DrgResult>& drg) {
  if (!drg) return nullptr;
  Json j;
  j["relation"] = drg->relation;
  j["diameter"] = drg->diameter;
  j["intersection_array"] = drg->intersection_array;
  j["distance_colors"] = drg->distance_colors;
  j["antipodal"] = drg->antipodal;
  j["antipodal_class_size"] = drg->antipodal_class_size;
  j["cover_of"] = drg->cover_of;
  return j;
}

Json lambda_json(const DesignParams& p) {
  Json j = Json::object();
  for (const auto& [cls, lam] : p.lambda_values) j[std::string(to_string(cls))] = lam;
  return j;
}

Json report_json(const AnalysisReport& r, bool timings) {
  Json j;
  j["q"] = r.q;
  j["p"] = r.p;
  j["alpha"] = r.alpha;
  j["modulus"] = r.modulus;
  j["omega"] = r.omega;
  j["v"] = r.params.v;
  j["b"] = r.params.b;
  j["k"] = r.params.k;
  j["r"] = r.params.r;
  j["lambda"] = lambda_json(r.params);
  j["char5"] = r.params.char5;
  j["degenerate"] = r.degenerate;
  j["schurian_classes"] = r.schurian_classes;
  j["psl_symmetric"] = r.psl_symmetric;
  j["psl_commutative"] = r.psl_commutative;
  j["frobenius_orbits"] = r.frobenius_orbits;
  j["cor_classes"] = r.cor_classes;
  j["full_group_classes"] = r.full_group_classes;
  j["wl_classes"] = r.wl_classes;
  j["wl_rounds"] = r.wl_rounds;
  j["wl_colors_per_round"] = r.wl_colors_per_round;
  j["wl_valencies"] = r.wl_valencies;
  j["wl_lambda"] = r.wl_lambda;
  j["schurian_flag"] = std::string(to_string(r.schurian_flag));
  j["symmetric"] = r.symmetric;
  j["commutative"] = r.commutative;
  j["check_level"] = r.check_level == CheckLevel::Full ? "full" : "sampled";
  j["drg"] = drg_json(r.drg);
  if (r.paper_row_present) {
    Json cells = Json::array();
    for (const auto& c : r.paper_cells)
      cells.push_back(Json{{"name", c.name},
                           {"expected", c.expected},
                           {"got", c.got},
                           {"match", c.match},
                           {"known_discrepancy", c.known_discrepancy}});
    j["paper"] = Json{{"matches", r.paper_matches()}, {"cells", cells}};
  } else {
    j["paper"] = nullptr;
  }
  if (timings) {
    Json t = Json::object();
    for (const auto& [name, ms] : r.timings_ms) t[name] = ms;
    j["timings_ms"] = t;
  }
  return j;
}

const std::vector<std::string> kTsvColumns = {"q",          "v",         "b",         "k",
                                              "r",          "schurian",  "cor",       "wl",
                                              "wl_rounds",  "flag",      "symmetric", "commutative",
                                              "drg_array",  "paper_ok"};

std::vector<std::string> tsv_fields(const AnalysisReport& r) {
  return {std::to_string(r.q),
          std::to_string(r.params.v),
          std::to_string(r.params.b),
          std::to_string(r.params.k),
          std::to_string(r.params.r),
          std::to_string(r.schurian_classes),
          std::to_string(r.cor_classes),
          std::to_string(r.wl_classes),
          std::to_string(r.wl_rounds),
          std::string(to_string(r.schurian_flag)),
          r.symmetric ? "yes" : "no",
          r.commutative ? "yes" : "no",
          r.drg ? intersection_array_string(*r.drg) : "-",
          r.paper_row_present ? (r.paper_matches() ? "yes" : "no") : "-"};
}

void tsv_line(std::ostream& out, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) out << (i ? "\t" : "") << fields[i];
  out << "\n";
}

std::string report_text(const AnalysisReport& r, bool timings) {
  std::ostringstream s;
  s << "q = " << r.q << " (p = " << r.p << ", alpha = " << r.alpha << ")\n";
  s << "modulus (low degree first): " << join(r.modulus, " ") << "\n";
  s << "omega: " << join(r.omega, " ") << "\n";
  s << "design: v = " << r.params.v << ", b = " << r.params.b << ", k = " << r.params.k << ", r = " << r.params.r
    << (r.degenerate ? " (degenerate)" : "") << "\n";
  s << "lambda:";
  for (const auto& [cls, lam] : r.params.lambda_values) s << " " << to_string(cls) << "=" << lam;
  s << "\n";
  s << "PSL orbital scheme: " << r.schurian_classes << " classes, symmetric=" << (r.psl_symmetric ? "yes" : "no")
    << ", commutative=" << (r.psl_commutative ? "yes" : "no") << "\n";
  s << "full group scheme: " << r.full_group_classes << " classes (2*" << r.frobenius_orbits << "-1 = "
    << r.cor_classes << ")\n";
  s << "WL scheme: " << r.wl_classes << " classes after " << r.wl_rounds << " rounds ("
    << join(r.wl_colors_per_round, " -> ") << " colors), " << to_string(r.schurian_flag)
    << ", symmetric=" << (r.symmetric ? "yes" : "no") << ", commutative=" << (r.commutative ? "yes" : "no")
    << ", check=" << (r.check_level == CheckLevel::Full ? "full" : "sampled") << "\n";
  s << "WL valencies: " << join(r.wl_valencies, " ") << "\n";
  s << "WL lambda per color: " << join(r.wl_lambda, " ") << "\n";
  if (r.drg) {
    s << "DRG: diameter " << r.drg->diameter << ", intersection array " << intersection_array_string(*r.drg)
      << (r.drg->antipodal ? ", antipodal" : "") << ", classes of size " << r.drg->antipodal_class_size
      << ", cover of K" << r.drg->cover_of << "\n";
  }
  if (r.paper_row_present) {
    s << "table comparison:";
    for (const auto& c : r.paper_cells) {
      s << " " << c.name << (c.match ? " ok" : c.known_discrepancy ? " differs(known)" : " DIFFERS");
      if (!c.match) s << "[" << c.expected << " vs " << c.got << "]";
    }
    s << "\n";
  }
  if (timings) {
    s << "timings (ms):";
    for (const auto& [name, ms] : r.timings_ms) s << " " << name << "=" << std::fixed << std::setprecision(1) << ms;
    s << "\n";
  }
  return s.str();
}

const CellCheck* find_cell(const AnalysisReport& r, const std::string& name) {
  for (const auto& c : r.paper_cells)
    if (c.name == name) return &c;
  return nullptr;
}

std::string mark(const AnalysisReport& r, const std::string& name) {
  const CellCheck* c = find_cell(r, name);
  if (!c) return " ";
  if (c->match) return "✓";
  return c->known_discrepancy ? "✗*" : "✗";
}

// setw counts bytes, the marks are multibyte
std::string pad(const std::string& v, std::size_t width) {
  std::size_t shown = 0;
  for (unsigned char ch : v) shown += (ch & 0xC0) != 0x80;
  return v + std::string(width > shown ? width - shown : 1, ' ');
}

}  // namespace

Format parse_format(const std::string& s) {
  if (s == "json") return Format::Json;
  if (s == "tsv") return Format::Tsv;
  if (s == "text") return Format::Text;
  throw Error(ErrorKind::BadInput, "cli", "unknown format '" + s + "'");
}

std::string render_report(const AnalysisReport& r, Format fmt, bool timings) {
  switch (fmt) {
    case Format::Json:
      return report_json(r, timings).dump(2) + "\n";
    case Format::Tsv: {
      std::ostringstream s;
      tsv_line(s, kTsvColumns);
      tsv_line(s, tsv_fields(r));
      return s.str();
    }
    case Format::Text:
      return report_text(r, timings);
  }
  return {};
}

std::string render_table(const std::vector<TableRow>& rows, Format fmt, bool expected, bool timings) {
  if (fmt == Format::Json) {
    Json arr = Json::array();
    for (const auto& row : rows) {
      Json j;
      if (row.report) {
        j = report_json(*row.report, timings);
      } else {
        j["q"] = row.q;
      }
      j["status"] = row.status;
      if (!row.message.empty()) j["message"] = row.message;
      arr.push_back(j);
    }
    return Json{{"rows", arr}}.dump(2) + "\n";
  }
  std::ostringstream s;
  if (fmt == Format::Tsv) {
    auto cols = kTsvColumns;
    cols.push_back("status");
    tsv_line(s, cols);
    for (const auto& row : rows) {
      std::vector<std::string> f;
      if (row.report) {
        f = tsv_fields(*row.report);
      } else {
        f.assign(kTsvColumns.size(), "-");
        f[0] = std::to_string(row.q);
      }
      f.push_back(row.status);
      tsv_line(s, f);
    }
    return s.str();
  }
  s << std::left << std::setw(5) << "q" << std::setw(8) << "v" << std::setw(9) << "b" << std::setw(4) << "k"
    << std::setw(6) << "r" << std::setw(6) << "cor" << std::setw(6) << "wl" << std::setw(22) << "flag"
    << "remarks\n";
  for (const auto& row : rows) {
    if (!row.report) {
      s << std::setw(5) << row.q << row.status << (row.message.empty() ? "" : ": " + row.message) << "\n";
      continue;
    }
    const AnalysisReport& r = *row.report;
    auto cell = [&](std::uint64_t value, const char* name, std::size_t width) {
      std::string v = std::to_string(value);
      if (expected) v += mark(r, name);
      s << pad(v, width);
    };
    s << std::setw(5) << r.q;
    cell(r.params.v, "v", 8);
    cell(r.params.b, "b", 9);
    cell(r.params.k, "k", 4);
    cell(r.params.r, "r", 6);
    cell(r.cor_classes, "cor_classes", 6);
    cell(r.wl_classes, "wl_classes", 6);
    std::string flag(to_string(r.schurian_flag));
    if (expected) flag += mark(r, "non_schurian");
    s << pad(flag, 22);
    std::string remarks;
    if (!r.commutative) remarks += "non-commutative" + (expected ? mark(r, "non_commutative") : "") + " ";
    if (r.drg)
      remarks += "DRG " + intersection_array_string(*r.drg) + (r.drg->antipodal ? " antipodal" : "") + " " +
                 std::to_string(r.drg->antipodal_class_size) + "-fold cover of K" + std::to_string(r.drg->cover_of) +
                 (expected && find_cell(r, "cover_of_K") ? mark(r, "cover_of_K") : "") + " ";
    if (r.degenerate) remarks += "degenerate ";
    s << remarks << "\n";
  }
  if (expected) s << "✓ agrees with the published table, ✗ differs, ✗* differs in a known transcription\n";
  return s.str();
}

std::string render_checks(std::uint64_t q, const std::vector<CheckResult>& checks, Format fmt) {
  std::size_t failed = 0;
  for (const auto& c : checks) failed += !c.passed;
  if (fmt == Format::Json) {
    Json arr = Json::array();
    for (const auto& c : checks)
      arr.push_back(Json{{"module", c.module}, {"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    return Json{{"q", q}, {"passed", failed == 0}, {"checks", arr}}.dump(2) + "\n";
  }
  std::ostringstream s;
  if (fmt == Format::Tsv) {
    tsv_line(s, {"module", "check", "result", "detail"});
    for (const auto& c : checks) tsv_line(s, {c.module, c.name, c.passed ? "pass" : "FAIL", c.detail});
    return s.str();
  }
  for (const auto& c : checks)
    s << (c.passed ? "pass " : "FAIL ") << std::left << std::setw(8) << c.module << c.name
      << (c.detail.empty() ? "" : " (" + c.detail + ")") << "\n";
  s << "q = " << q << ": " << checks.size() - failed << "/" << checks.size() << " checks passed\n";
  return s.str();
}

std::string render_wl(const WlSummary& w, Format fmt) {
  const std::uint32_t classes = w.trace.final_coloring.num_colors() - w.props.homogeneous;
  if (fmt == Format::Json) {
    Json j;
    j["n"] = w.n;
    j["input_colors"] = w.input_colors;
    j["rank"] = w.trace.final_coloring.num_colors();
    j["classes"] = classes;
    j["rounds"] = w.trace.rounds;
    j["colors_per_round"] = w.trace.colors_per_round;
    j["homogeneous"] = w.props.homogeneous;
    j["symmetric"] = w.props.symmetric;
    j["commutative"] = w.props.commutative;
    j["drg"] = drg_json(w.drg);
    return j.dump(2) + "\n";
  }
  std::ostringstream s;
  if (fmt == Format::Tsv) {
    tsv_line(s, {"n", "input_colors", "rank", "rounds", "homogeneous", "symmetric", "commutative", "drg_array"});
    tsv_line(s, {std::to_string(w.n), std::to_string(w.input_colors),
                 std::to_string(w.trace.final_coloring.num_colors()), std::to_string(w.trace.rounds),
                 w.props.homogeneous ? "yes" : "no", w.props.symmetric ? "yes" : "no",
                 w.props.commutative ? "yes" : "no", w.drg ? intersection_array_string(*w.drg) : "-"});
    return s.str();
  }
  s << "n = " << w.n << ", " << w.input_colors << " input colors\n";
  s << "stable after " << w.trace.rounds << " rounds: rank " << w.trace.final_coloring.num_colors() << " ("
    << join(w.trace.colors_per_round, " -> ") << ")\n";
  s << "homogeneous=" << (w.props.homogeneous ? "yes" : "no") << ", symmetric=" << (w.props.symmetric ? "yes" : "no")
    << ", commutative=" << (w.props.commutative ? "yes" : "no") << "\n";
  if (w.drg) s << "DRG intersection array " << intersection_array_string(*w.drg) << "\n";
  return s.str();
}

}  // namespace octa
