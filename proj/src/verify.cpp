// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <functional>
#include <random>
#include <set>

#include "octa/analysis.hpp"
#include "octa/counting.hpp"
#include "octa/error.hpp"

namespace octa {

namespace {

// The std::map reference is cubic with a large constant; keep it to small point sets.
constexpr std::size_t kReferenceWlMaxPoints = 210;
constexpr int kRandomActionTrials = 200;

struct Outcome {
  bool passed;
  std::string detail;
};

class Runner {
 public:
  explicit Runner(std::vector<CheckResult>& out) : out_(out) {}

  void run(const std::string& module, const std::string& name, const std::function<Outcome()>& fn) {
    CheckResult r{module, name, false, {}};
    try {
      const Outcome o = fn();
      r.passed = o.passed;
      r.detail = o.detail;
    } catch (const std::exception& e) {
      r.detail = e.what();
    }
    out_.push_back(std::move(r));
  }

 private:
  std::vector<CheckResult>& out_;
};

Outcome equal(std::uint64_t expected, std::uint64_t got) {
  return {expected == got, "expected " + std::to_string(expected) + ", got " + std::to_string(got)};
}

std::set<std::array<PointIndex, 6>> block_set(const Design& d) {
  std::set<std::array<PointIndex, 6>> s;
  for (const auto& b : d.blocks) s.insert(b.points);
  return s;
}

Outcome preserves_blocks(const Design& d, const Perm& g) {
  const auto blocks = block_set(d);
  for (const auto& b : d.blocks) {
    std::array<PointIndex, 6> img{};
    for (int k = 0; k < 6; ++k) img[k] = g(b.points[k]);
    std::sort(img.begin(), img.end());
    if (!blocks.count(img)) return {false, "a block is mapped outside the design"};
  }
  return {true, {}};
}

}  // namespace

std::vector<CheckResult> verify_all(std::uint64_t q, const AnalyzeOptions& options) {
  const auto [p, alpha] = admissible_q(q);
  const std::uint64_t n = (q * q - 1) / 4;
  if (n > options.max_points && !options.force)
    throw Error(ErrorKind::ResourceLimit, "cli",
                "q = " + std::to_string(q) + " has " + std::to_string(n) + " points, above --max-points " +
                    std::to_string(options.max_points) + "; pass --force to run it");

  std::vector<CheckResult> out;
  Runner run(out);
  const Field f = make_field(q, options);
  std::mt19937_64 rng(q);

  run.run("gf", "i^2 = -1", [&] { return Outcome{f.mul(f.i(), f.i()) == f.neg(f.one()), {}}; });
  run.run("gf", "omega generates F_q^x", [&] { return equal(q - 1, f.order(f.omega())); });
  run.run("gf", "inverses", [&] {
    for (std::uint32_t a = 1; a < q; ++a)
      if (f.mul(Element{a}, f.inv(Element{a})) != f.one()) return Outcome{false, "at code " + std::to_string(a)};
    return Outcome{true, {}};
  });
  run.run("gf", "Frobenius is a ring map", [&] {
    std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(q - 1));
    for (int t = 0; t < 500; ++t) {
      const Element a{pick(rng)}, b{pick(rng)};
      if (f.frobenius(f.add(a, b)) != f.add(f.frobenius(a), f.frobenius(b)) ||
          f.frobenius(f.mul(a, b)) != f.mul(f.frobenius(a), f.frobenius(b)))
        return Outcome{false, "fails at " + f.format(a) + ", " + f.format(b)};
    }
    return Outcome{true, {}};
  });
  run.run("gf", "1 + i = -i exactly in characteristic 5",
          [&] { return Outcome{f.is_char5_identity() == (p == 5), {}}; });

  const Design d = build_design(f);
  const PointSet& pts = *d.points;

  run.run("pgroup", "PSL is transitive on points", [&] { return equal(n, orbit_of_point(d.generators, 0).size()); });
  run.run("pgroup", "point stabilizer order 2q", [&] {
    const auto rep = point_stabilizer_report(pts);
    Outcome o = equal(2 * q, rep.order);
    if (!rep.shape_verified) o = {false, "stabilizer shape not verified"};
    return o;
  });
  run.run("pgroup", "g(g^-1(x)) = x on random elements", [&] {
    std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(q - 1));
    std::uniform_int_distribution<std::uint32_t> pt(0, static_cast<std::uint32_t>(n - 1));
    int done = 0;
    while (done < kRandomActionTrials) {
      const Mat2 m{Element{pick(rng)}, Element{pick(rng)}, Element{pick(rng)}, Element{pick(rng)}};
      if (mat_det(f, m) == f.zero()) continue;
      const Mat2 inv = mat_inverse(f, m);
      const PointIndex x = pt(rng);
      if (pts.act(m, pts.act(inv, x)) != x) return Outcome{false, "fails at point " + std::to_string(x)};
      ++done;
    }
    return Outcome{true, {}};
  });
  run.run("pgroup", "rotation contract", [&] {
    sigma_perm(pts);
    return Outcome{true, {}};
  });
  if (group_order(f) <= kBruteForceGroupLimit)
    run.run("pgroup", "|PSL(2,q)| by enumeration", [&] { return equal(group_order(f), enumerate_psl(f).size()); });

  run.run("design", "counts match closed forms", [&] {
    const DesignParams got = verify_counts(d);
    return Outcome{got == closed_form_params(p, alpha).params, {}};
  });
  run.run("design", "block stabilizer", [&] {
    const auto rep = block_stabilizer_report(d);
    Outcome o = equal(d.char5 ? 60 : 12, rep.order);
    if (rep.brute_forced && rep.element_orders.count(6)) o = {false, "element of order 6 fixes the basic block"};
    if (rep.explicit_reps_verified && !*rep.explicit_reps_verified) o = {false, "listed representatives fail"};
    if (rep.brute_forced) o.detail += " (brute force)";
    return o;
  });
  run.run("design", "Frobenius preserves the blocks", [&] { return preserves_blocks(d, frobenius_perm(pts)); });
  run.run("design", "rotation preserves the blocks", [&] { return preserves_blocks(d, sigma_perm(pts)); });
  if (!d.char5) {
    const ClosedForm cf = closed_form_params(p, alpha);
    run.run("design", "edge and diagonal census", [&] {
      const auto c = edge_diagonal_census(d);
      if (c.blocks_per_edge != 4 || c.blocks_per_diagonal != 1)
        return Outcome{false, "edge/diagonal multiplicities " + std::to_string(c.blocks_per_edge) + "/" +
                                  std::to_string(c.blocks_per_diagonal)};
      if (c.edges != cf.edges || c.diagonals != cf.diagonals)
        return Outcome{false, "counts " + std::to_string(c.edges) + "/" + std::to_string(c.diagonals)};
      return Outcome{true, std::to_string(c.edges) + " edges, " + std::to_string(c.diagonals) + " diagonals"};
    });
    const Block& t = d.blocks[0];
    PointPair edge{};
    for (int a = 0; a < 6; ++a)
      for (int b = a + 1; b < 6; ++b)
        if (!t.is_diagonal(t.points[a], t.points[b])) edge = {t.points[a], t.points[b]};
    run.run("design", "edges form one orbit", [&] { return equal(cf.edges, pair_orbit(d, edge).size()); });
    run.run("design", "diagonals form one orbit", [&] { return equal(cf.diagonals, pair_orbit(d, t.diagonals[0]).size()); });
  } else {
    run.run("design", "adjacent pairs lie in one block", [&] {
      std::uint32_t worst = 0;
      d.lambda.for_each([&](PointIndex, PointIndex, std::uint32_t c) { worst = std::max(worst, c); });
      return equal(1, worst);
    });
  }

  run.run("counting", "Burnside count equals direct count", [&] {
    return equal(orbit_count_pf(p, alpha).count, orbit_count_direct(f));
  });

  const auto vn = static_cast<std::uint32_t>(n);
  const CheckLevel level = options.check_level.value_or(default_check_level(vn));
  const PairColoring psl = orbital_coloring(d.generators, vn);
  const PairColoring full = full_group_coloring(pts);
  run.run("scheme", "PSL orbitals: (q-3)/2 classes", [&] { return equal((q - 3) / 2, psl.num_colors() - 1); });
  run.run("scheme", "PSL orbitals are coherent", [&] {
    intersection_tensor(psl, level);
    return Outcome{true, {}};
  });
  run.run("scheme", "full group orbitals: 2|P/F|-1 classes",
          [&] { return equal(orbit_count_pf(p, alpha).m_min, full.num_colors() - 1); });
  run.run("scheme", "PSL orbitals refine full group orbitals", [&] { return Outcome{refines(psl, full), {}}; });
  run.run("scheme", "PSL orbitals are lambda-equitable", [&] {
    gpbibd_check(d, psl);
    return Outcome{true, {}};
  });

  const PairColoring lam = lambda_coloring(d);
  const RefinementTrace trace = wl_stabilize(lam);
  const PairColoring& wl = trace.final_coloring;
  run.run("wl", "monotone refinement", [&] {
    const auto& c = trace.colors_per_round;
    return Outcome{std::is_sorted(c.begin(), c.end()), {}};
  });
  run.run("wl", "fixpoint is idempotent", [&] {
    const RefinementTrace again = wl_stabilize(wl);
    return Outcome{again.final_coloring == wl && again.rounds == 1, {}};
  });
  run.run("wl", "output refines the lambda partition", [&] { return Outcome{refines(wl, lam), {}}; });
  run.run("wl", "full group orbitals refine the output", [&] { return Outcome{refines(full, wl), {}}; });
  if (n <= kReferenceWlMaxPoints)
    run.run("wl", "parallel kernel matches reference", [&] {
      const RefinementTrace ref = wl_stabilize_reference(lam);
      return Outcome{ref.final_coloring == wl && ref.colors_per_round == trace.colors_per_round, {}};
    });
  run.run("wl", level == CheckLevel::Full ? "tensor verified on every pair" : "tensor verified on samples", [&] {
    const CoherentConfig cc = intersection_tensor(wl, level);
    const SchemeProps props = check_props(cc);
    if (!props.homogeneous) return Outcome{false, "not homogeneous"};
    return Outcome{true, std::to_string(props.classes) + " classes"};
  });
  run.run("wl", "output is lambda-equitable", [&] {
    gpbibd_check(d, wl);
    return Outcome{true, {}};
  });
  if (const auto row = paper_row(q); row && row->smallest_classes) {
    run.run("wl", "class count agrees with the published table",
            [&] { return equal(*row->smallest_classes, wl.num_colors() - 1); });
    if (row->non_commutative)
      run.run("wl", "output is non-commutative", [&] {
        return Outcome{!check_props(intersection_tensor(wl, level)).commutative, {}};
      });
  }
  return out;
}

}  // namespace octa
