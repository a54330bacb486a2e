// SPDX-License-Identifier: Apache-2.0
#include <cstdlib>
#include <fstream>
#include <iostream>

#include <omp.h>

#include <CLI11.hpp>

#include "octa/analysis.hpp"
#include "octa/counting.hpp"
#include "octa/error.hpp"
#include "octa/render.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInternal = 2;
constexpr int kExitInput = 3;

int exit_code_for(const octa::Error& e) { return octa::is_input_error(e.kind()) ? kExitInput : kExitInternal; }

void apply_thread_hint() {
  const char* env = std::getenv("OCTA_THREADS");
  if (!env) return;
  char* end = nullptr;
  const long t = std::strtol(env, &end, 10);
  if (end != env && *end == '\0' && t > 0) omp_set_num_threads(static_cast<int>(t));
}

struct CommonFlags {
  std::string format = "text";
  std::string modulus;
  std::string generator;
  std::uint32_t max_points = 2000;
  bool force = false;
  std::string dump_design;
  std::string dump_scheme;
  std::string check_level;
  bool timings = false;

  void attach(CLI::App* app) {
    app->add_option("--format", format, "json, tsv or text")->check(CLI::IsMember({"json", "tsv", "text"}));
    app->add_option("--modulus", modulus, "field spec 'p alpha c0 ... c_alpha'");
    app->add_option("--generator", generator, "primitive element as coefficients c0 ... c_{alpha-1}");
    app->add_option("--max-points", max_points, "largest point count run without --force");
    app->add_flag("--force", force, "run beyond --max-points");
    app->add_option("--dump-design", dump_design, "write the blocks to PATH");
    app->add_option("--dump-scheme", dump_scheme, "write the WL scheme to PATH and its tensor to PATH.tensor");
    app->add_option("--check-level", check_level, "full or sampled")->check(CLI::IsMember({"full", "sampled"}));
    app->add_flag("--timings", timings, "include per-phase timings");
  }

  octa::AnalyzeOptions options() const {
    octa::AnalyzeOptions o;
    if (!modulus.empty()) o.modulus = modulus;
    if (!generator.empty()) o.generator = generator;
    o.max_points = max_points;
    o.force = force;
    if (!dump_design.empty()) o.dump_design = dump_design;
    if (!dump_scheme.empty()) o.dump_scheme = dump_scheme;
    if (check_level == "full") o.check_level = octa::CheckLevel::Full;
    if (check_level == "sampled") o.check_level = octa::CheckLevel::Sampled;
    return o;
  }
};

int run_analyze(std::uint64_t q, const CommonFlags& flags) {
  const auto report = octa::analyze(q, flags.options());
  std::cout << octa::render_report(report, octa::parse_format(flags.format), flags.timings);
  return kExitOk;
}

int run_table(std::uint64_t max_q, bool expected, const CommonFlags& flags) {
  const auto opts = flags.options();
  std::vector<octa::TableRow> rows;
  bool failed = false;
  for (auto q : octa::admissible_orders(5, max_q)) {
    octa::TableRow row;
    row.q = q;
    const std::uint64_t n = (q * q - 1) / 4;
    if (n > opts.max_points && !opts.force) {
      row.status = "skipped";
      row.message = std::to_string(n) + " points exceed --max-points";
    } else {
      try {
        octa::AnalyzeOptions per_q = opts;
        per_q.dump_design.reset();
        per_q.dump_scheme.reset();
        // overrides only make sense for one field
        if (opts.modulus) {
          const auto spec = octa::parse_field_spec(*opts.modulus);
          const auto pp = octa::prime_power(q);
          if (!pp || pp->first != spec.p || pp->second != spec.alpha) {
            per_q.modulus.reset();
            per_q.generator.reset();
          }
        }
        row.report = octa::analyze(q, per_q);
        if (expected && !row.report->paper_matches()) {
          row.status = "mismatch";
          failed = true;
        }
      } catch (const octa::Error& e) {
        row.status = std::string(octa::to_string(e.kind()));
        row.message = e.what();
        failed = true;
      }
    }
    rows.push_back(std::move(row));
  }
  std::cout << octa::render_table(rows, octa::parse_format(flags.format), expected, flags.timings);
  return failed ? kExitInternal : kExitOk;
}

int run_verify(std::uint64_t q, const CommonFlags& flags) {
  const auto checks = octa::verify_all(q, flags.options());
  std::cout << octa::render_checks(q, checks, octa::parse_format(flags.format));
  for (const auto& c : checks)
    if (!c.passed) return kExitInternal;
  return kExitOk;
}

int run_wl(const std::string& input, const CommonFlags& flags) {
  std::ifstream in(input);
  if (!in) throw octa::Error(octa::ErrorKind::BadInput, "wl", "cannot open " + input);
  const octa::PairColoring c = octa::read_scheme(in);
  octa::WlSummary s;
  s.n = c.n();
  s.input_colors = c.num_colors();
  s.trace = octa::wl_stabilize(c);
  const auto level = flags.options().check_level.value_or(octa::default_check_level(c.n()));
  const auto cc = octa::intersection_tensor(s.trace.final_coloring, level);
  s.props = octa::check_props(cc);
  if (s.props.homogeneous && s.props.symmetric && s.props.classes == 3) s.drg = octa::drg_analysis(cc);
  if (!flags.dump_scheme.empty()) {
    std::ofstream out(flags.dump_scheme);
    octa::write_scheme(s.trace.final_coloring, out);
    std::ofstream tout(flags.dump_scheme + ".tensor");
    octa::write_tensor(*cc.tensor, tout);
    if (!out || !tout) throw octa::Error(octa::ErrorKind::BadInput, "wl", "cannot write " + flags.dump_scheme);
  }
  std::cout << octa::render_wl(s, octa::parse_format(flags.format));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  apply_thread_hint();

  CLI::App app{"GPBIBDs from PSL(2,q) on octahedra, and their coherent closures"};
  app.require_subcommand(1);

  CommonFlags analyze_flags, table_flags, verify_flags, wl_flags;
  std::uint64_t analyze_q = 0, verify_q = 0, max_q = 49;
  bool expected = false;
  std::string input;

  auto* analyze = app.add_subcommand("analyze", "run the full pipeline for one q");
  analyze->add_option("q", analyze_q, "prime power, 1 mod 4")->required();
  analyze_flags.attach(analyze);

  auto* table = app.add_subcommand("table", "one row per admissible q up to --max-q");
  table->add_option("--max-q", max_q, "largest q");
  table->add_flag("--expected", expected, "compare against the published table");
  table_flags.attach(table);

  auto* verify = app.add_subcommand("verify", "run every invariant check for one q");
  verify->add_option("q", verify_q, "prime power, 1 mod 4")->required();
  verify_flags.attach(verify);

  auto* wl = app.add_subcommand("wl-stabilize", "2-WL closure of a coloring in scheme format");
  wl->add_option("--input", input, "scheme file")->required();
  wl_flags.attach(wl);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*analyze) return run_analyze(analyze_q, analyze_flags);
    if (*table) return run_table(max_q, expected, table_flags);
    if (*verify) return run_verify(verify_q, verify_flags);
    if (*wl) return run_wl(input, wl_flags);
  } catch (const octa::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitOk;
}
