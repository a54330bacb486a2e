// SPDX-License-Identifier: Apache-2.0
#include <chrono>
#include <fstream>
#include <sstream>

#include "octa/analysis.hpp"
#include "octa/counting.hpp"
#include "octa/error.hpp"

namespace octa {

namespace {

class PhaseTimer {
 public:
  explicit PhaseTimer(std::vector<std::pair<std::string, double>>& out) : out_(out) {}
  void mark(const char* name) {
    const auto now = std::chrono::steady_clock::now();
    out_.emplace_back(name, std::chrono::duration<double, std::milli>(now - last_).count());
    last_ = now;
  }

 private:
  std::vector<std::pair<std::string, double>>& out_;
  std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

std::vector<std::uint32_t> parse_coeffs(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::uint32_t> out;
  std::int64_t c;
  while (in >> c) {
    if (c < 0) throw Error(ErrorKind::BadInput, "cli", "negative coefficient in '" + text + "'");
    out.push_back(static_cast<std::uint32_t>(c));
  }
  if (!in.eof()) throw Error(ErrorKind::BadInput, "cli", "cannot parse coefficients '" + text + "'");
  return out;
}

void write_file(const std::string& path, const auto& writer) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::BadInput, "cli", "cannot open " + path + " for writing");
  writer(out);
  if (!out) throw Error(ErrorKind::BadInput, "cli", "write to " + path + " failed");
}

void expect_equal(std::uint64_t expected, std::uint64_t got, const std::string& what) {
  if (expected != got)
    throw Error(ErrorKind::CountMismatch, "cli",
                what + ": expected " + std::to_string(expected) + ", got " + std::to_string(got));
}

}  // namespace

std::pair<std::uint32_t, std::uint32_t> admissible_q(std::uint64_t q) {
  const auto pp = prime_power(q);
  if (!pp) throw Error(ErrorKind::BadInput, "cli", std::to_string(q) + " is not a prime power");
  if (q % 4 != 1) throw Error(ErrorKind::BadCongruence, "cli", std::to_string(q) + " is not 1 mod 4");
  return *pp;
}

Field make_field(std::uint64_t q, const AnalyzeOptions& options) {
  const auto [p, alpha] = admissible_q(q);
  std::optional<std::vector<std::uint32_t>> modulus, generator;
  if (options.modulus) {
    const FieldSpec spec = parse_field_spec(*options.modulus);
    if (spec.p != p || spec.alpha != alpha)
      throw Error(ErrorKind::BadInput, "cli", "modulus spec is for " + std::to_string(spec.p) + "^" +
                                                  std::to_string(spec.alpha) + ", not q = " + std::to_string(q));
    modulus = spec.modulus;
  }
  if (options.generator) generator = parse_coeffs(*options.generator);
  return Field::create(p, alpha, modulus, generator);
}

AnalysisReport analyze(std::uint64_t q, const AnalyzeOptions& options) {
  const auto [p, alpha] = admissible_q(q);
  const std::uint64_t n = (q * q - 1) / 4;
  if (n > options.max_points && !options.force)
    throw Error(ErrorKind::ResourceLimit, "cli",
                "q = " + std::to_string(q) + " has " + std::to_string(n) + " points, above --max-points " +
                    std::to_string(options.max_points) + "; pass --force to run it");

  AnalysisReport rep;
  PhaseTimer timer(rep.timings_ms);
  rep.q = q;
  rep.p = p;
  rep.alpha = alpha;

  const Field f = make_field(q, options);
  rep.modulus = f.modulus();
  rep.omega = f.coeffs(f.omega());
  timer.mark("field");

  const Design d = build_design(f);
  rep.degenerate = d.degenerate;
  timer.mark("design");

  rep.params = verify_counts(d);
  const ClosedForm cf = closed_form_params(p, alpha);
  if (!(rep.params == cf.params))
    throw Error(ErrorKind::CountMismatch, "design", "computed parameters differ from the closed forms");
  if (options.dump_design) write_file(*options.dump_design, [&](std::ostream& o) { write_design(d, o); });
  timer.mark("verify");

  const auto vn = static_cast<std::uint32_t>(d.v());
  rep.check_level = options.check_level.value_or(default_check_level(vn));

  const PairColoring psl = orbital_coloring(d.generators, vn);
  rep.schurian_classes = psl.num_colors() - 1;
  expect_equal((q - 3) / 2, rep.schurian_classes, "PSL orbital classes");
  gpbibd_check(d, psl);
  {
    const SchemeProps props = check_props(intersection_tensor(psl, rep.check_level));
    rep.psl_commutative = props.commutative;
    rep.psl_symmetric = props.symmetric;
  }
  timer.mark("psl_scheme");

  const PairColoring full = full_group_coloring(*d.points);
  rep.full_group_classes = full.num_colors() - 1;
  const OrbitCount oc = orbit_count_pf(p, alpha);
  expect_equal(oc.count, orbit_count_direct(f), "Frobenius orbit count");
  rep.frobenius_orbits = oc.count;
  rep.cor_classes = static_cast<std::uint32_t>(oc.m_min);
  expect_equal(rep.cor_classes, rep.full_group_classes, "full group orbital classes");
  if (!refines(psl, full))
    throw Error(ErrorKind::RefinementViolation, "scheme", "PSL orbitals do not refine the full group orbitals");
  timer.mark("full_scheme");

  const PairColoring lam = lambda_coloring(d);
  RefinementTrace trace = wl_stabilize(lam);
  const PairColoring& wl = trace.final_coloring;
  rep.wl_classes = wl.num_colors() - 1;
  rep.wl_rounds = trace.rounds;
  rep.wl_colors_per_round = trace.colors_per_round;
  if (!refines(wl, lam))
    throw Error(ErrorKind::RefinementViolation, "wl", "WL output does not refine the lambda partition");
  if (!refines(full, wl))
    throw Error(ErrorKind::RefinementViolation, "wl", "full group orbitals do not refine the WL output");
  timer.mark("wl");

  const CoherentConfig cc = intersection_tensor(wl, rep.check_level);
  const SchemeProps props = check_props(cc);
  rep.commutative = props.commutative;
  rep.symmetric = props.symmetric;
  if (!props.homogeneous) throw Error(ErrorKind::NotCoherent, "wl", "WL scheme is not homogeneous");
  rep.wl_valencies.assign(cc.valency.begin(), cc.valency.end());
  rep.wl_lambda = gpbibd_check(d, wl);
  rep.schurian_flag = schurian_flag(rep.wl_classes, rep.full_group_classes);
  if (options.dump_scheme) {
    write_file(*options.dump_scheme, [&](std::ostream& o) { write_scheme(wl, o); });
    write_file(*options.dump_scheme + ".tensor", [&](std::ostream& o) { write_tensor(*cc.tensor, o); });
  }
  timer.mark("tensor");

  if (options.drg && props.symmetric && props.classes == 3) rep.drg = drg_analysis(cc);
  timer.mark("drg");

  if (const auto row = paper_row(q)) {
    rep.paper_row_present = true;
    rep.paper_cells = compare_with_paper(rep, *row);
  }
  return rep;
}

}  // namespace octa
