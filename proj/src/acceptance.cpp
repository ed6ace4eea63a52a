#include "residuum/acceptance.hpp"

#include <random>
#include <sstream>

#include "residuum/balance.hpp"
#include "residuum/commands.hpp"
#include "residuum/curve_document.hpp"
#include "residuum/errors.hpp"
#include "residuum/expr_parse.hpp"
#include "residuum/local_sing.hpp"

namespace residuum {

namespace {

Rational Q(long long n, long long d = 1) { return Rational(BigInt(n), BigInt(d)); }

long long rand_int(std::mt19937_64& rng, long long lo, long long hi) {
  return lo + static_cast<long long>(rng() % static_cast<unsigned long long>(hi - lo + 1));
}

Rational rand_rational(std::mt19937_64& rng) {
  long long n = rand_int(rng, -9, 9);
  if (n == 0) n = 1;
  return Q(n, rand_int(rng, 1, 9));
}

DualGraph triangle() {
  return DualGraph::Builder()
      .add_component("C1")
      .add_component("C2")
      .add_component("C3")
      .add_edge("e12", "C1", "C2")
      .add_edge("e23", "C2", "C3")
      .add_edge("e31", "C1", "C3")
      .build();
}

DualGraph chain3() {
  return DualGraph::Builder()
      .add_component("C1")
      .add_component("C2")
      .add_component("C3")
      .add_edge("a", "C1", "C2")
      .add_edge("b", "C2", "C3")
      .build();
}

DualGraph theta() {
  return DualGraph::Builder()
      .add_component("C1")
      .add_component("C2")
      .add_edge("e1", "C1", "C2")
      .add_edge("e2", "C1", "C2")
      .add_edge("e3", "C1", "C2")
      .build();
}

DualGraph loops(int n) {
  DualGraph::Builder b;
  b.add_component("C");
  for (int i = 0; i < n; ++i) b.add_edge("e" + std::to_string(i), "C", "C");
  return b.build();
}

DualGraph random_connected_graph(std::mt19937_64& rng, int ncomp, int extra_edges) {
  DualGraph::Builder b;
  for (int i = 0; i < ncomp; ++i) b.add_component("C" + std::to_string(i));
  int eid = 0;
  for (int i = 1; i < ncomp; ++i) {
    b.add_edge("e" + std::to_string(eid++), "C" + std::to_string(i),
               "C" + std::to_string(static_cast<int>(rand_int(rng, 0, i - 1))));
  }
  for (int i = 0; i < extra_edges; ++i) {
    b.add_edge("x" + std::to_string(eid++),
               "C" + std::to_string(static_cast<int>(rand_int(rng, 0, ncomp - 1))),
               "C" + std::to_string(static_cast<int>(rand_int(rng, 0, ncomp - 1))));
  }
  return b.build();
}

KDifferential random_k1_differential(std::mt19937_64& rng) {
  std::vector<PrincipalPart> parts;
  std::vector<Rational> used;
  for (long long i = 0, n = rand_int(rng, 0, 3); i < n; ++i) {
    Rational p = Q(rand_int(rng, -4, 4));
    bool dup = false;
    for (const auto& u : used) dup = dup || u == p;
    if (dup) continue;
    used.push_back(p);
    PrincipalPart part;
    part.location = p;
    for (long long j = 0, m = rand_int(rng, 1, 3); j < m; ++j) {
      part.coefficients.push_back(rand_int(rng, 0, 2) == 0 ? Q(0) : rand_rational(rng));
    }
    while (!part.coefficients.empty() && part.coefficients.front().is_zero()) {
      part.coefficients.erase(part.coefficients.begin());
    }
    if (!part.coefficients.empty()) parts.push_back(part);
  }
  KDifferential eta = from_principal_parts(1, parts);
  std::vector<Rational> poly;
  for (long long i = 0, n = rand_int(rng, 0, 2); i <= n; ++i) poly.push_back(rand_rational(rng));
  return eta + KDifferential(1, RationalFunction(Polynomial(poly),
                                                 Polynomial::constant(Q(1))));
}

const char* kTriangleJson = R"({
  "format_version": "1",
  "components": [
    {"id": "C1", "genus": 0},
    {"id": "C2", "genus": 0},
    {"id": "C3", "genus": 0}
  ],
  "edges": [
    {"id": "e12", "ends": ["C1", "C2"]},
    {"id": "e23", "ends": ["C2", "C3"]},
    {"id": "e31", "ends": ["C1", "C3"]}
  ]
})";

struct Checker {
  bool pass = true;
  std::ostringstream detail;

  void expect(bool ok, const std::string& what) {
    if (!ok) {
      if (!pass) detail << "; ";
      pass = false;
      detail << what;
    }
  }
};

CriterionResult criterion_1() {
  Checker c;
  KDifferential eta(3, parse_rational_function("1/z^3", "z"));
  c.expect(k_residue(eta, PolePoint::finite(Q(0))) == Q(1), "Res_0((dz)^3/z^3) != 1");
  c.expect(k_residue(eta, PolePoint::infinity()) == Q(-1), "Res_inf((dz)^3/z^3) != -1");
  KDifferential cusp_pow(3, parse_rational_function("1/z^6", "z"));
  c.expect(k_residue(cusp_pow, PolePoint::finite(Q(0))) == Q(0), "Res_0((dt)^3/t^6) != 0");
  return {1, "k-residue examples", c.pass, c.detail.str()};
}

CriterionResult criterion_2() {
  Checker c;
  for (int k = 1; k <= 6; ++k) {
    std::string f = "1/z^" + std::to_string(k);
    KDifferential eta(k, parse_rational_function(f, "z"));
    RationalFunction expected = parse_rational_function(f, "z");
    if (k % 2 != 0) expected = -expected;
    c.expect(to_infinity_chart(eta).f() == expected,
             "chart change wrong at k = " + std::to_string(k));
    c.expect(to_infinity_chart(to_infinity_chart(eta)) == eta,
             "involution broken at k = " + std::to_string(k));
  }
  return {2, "general-k chart change", c.pass, c.detail.str()};
}

CriterionResult criterion_3() {
  Checker c;
  std::mt19937_64 rng(3003);
  for (int trial = 0; trial < 500; ++trial) {
    KDifferential eta = random_k1_differential(rng);
    if (!(residue_sum(eta) == Q(0))) {
      c.expect(false, "residue sum nonzero in trial " + std::to_string(trial) + " for " +
                          eta.f().str("z"));
      break;
    }
  }
  return {3, "k=1 residue theorem, 500 random differentials", c.pass, c.detail.str()};
}

CriterionResult criterion_4() {
  Checker c;
  std::mt19937_64 seed_rng(4004);
  std::vector<std::pair<std::string, DualGraph>> graphs;
  graphs.emplace_back("triangle", triangle());
  graphs.emplace_back("chain3", chain3());
  graphs.emplace_back("theta", theta());
  graphs.emplace_back("random6", random_connected_graph(seed_rng, 6, 4));
  for (const auto& [name, g] : graphs) {
    EquivalenceVerdict v = equivalence_probe(g, 1, 100, 40 + g.edges().size());
    c.expect(v.asserted && v.holds && v.both_ok == 100,
             "equivalence failed on " + name);
  }
  return {4, "balancing equivalence on four graphs x 100 trials", c.pass, c.detail.str()};
}

CriterionResult criterion_5() {
  Checker c;
  std::mt19937_64 rng(5005);
  for (int trial = 0; trial < 20; ++trial) {
    DualGraph g = random_connected_graph(rng, static_cast<int>(rand_int(rng, 1, 6)),
                                         static_cast<int>(rand_int(rng, 0, 4)));
    auto basis = dualizing_section_space(g);
    c.expect(static_cast<long long>(basis.size()) == betti1(g),
             "dim W != b1 on trial " + std::to_string(trial));
  }
  c.expect(dualizing_section_space(triangle()).size() == 1, "triangle dim W != 1");
  c.expect(arithmetic_genus(triangle()) == 1, "triangle p_a != 1");
  return {5, "dim W = b1 on 20 random graphs; triangle gives 1 = p_a", c.pass, c.detail.str()};
}

CriterionResult criterion_6() {
  Checker c;
  std::mt19937_64 rng(6006);
  std::vector<DualGraph> graphs = {triangle(), chain3(), theta(), loops(1), loops(2), loops(3)};
  for (int i = 0; i < 10; ++i) {
    graphs.push_back(random_connected_graph(rng, static_cast<int>(rand_int(rng, 1, 5)),
                                            static_cast<int>(rand_int(rng, 0, 3))));
  }
  for (size_t i = 0; i < graphs.size(); ++i) {
    const DualGraph& g = graphs[i];
    auto basis = dualizing_section_space(g);
    ResidueMatrix m = residue_matrix(g, basis);
    SpanReport rep = span_report(m, g.sum_genus(), static_cast<long long>(g.edges().size()));
    c.expect(rep.injective && rep.spans_dual,
             "span/injectivity failed on graph " + std::to_string(i));
  }
  for (int d = 1; d <= 3; ++d) {
    DualGraph g = loops(d);
    ResidueMatrix m = residue_matrix(g, dualizing_section_space(g));
    c.expect(m.m.rank() == static_cast<size_t>(d),
             "rank != delta on the " + std::to_string(d) + "-loop curve");
  }
  return {6, "residue span: injective and spans the dual on all test graphs", c.pass,
          c.detail.str()};
}

CriterionResult criterion_7() {
  Checker c;
  std::vector<DualGraph> graphs = {triangle(), loops(1), loops(2), loops(3)};
  for (size_t i = 0; i < graphs.size(); ++i) {
    DimensionReport dims = dimension_report(graphs[i]);
    c.expect(dims.im_res_dim == dims.delta - 1,
             "im(Res) != delta - 1 on graph " + std::to_string(i));
    c.expect(dims.h_vd - dims.h_w == dims.delta - 1,
             "h_VD - h_W != delta - 1 on graph " + std::to_string(i));
  }
  CurveDocument doc = CurveDocument::parse(kTriangleJson);
  Report span = cmd_span(doc);
  bool warned = false;
  for (const auto& w : span.warnings()) warned = warned || w.id == "W-DELTA-CONSTRAINT-COUNT";
  c.expect(warned, "cmd_span did not flag the constraint-count discrepancy");
  return {7, "simple-pole residue rank delta - 1 and the discrepancy warning", c.pass,
          c.detail.str()};
}

CriterionResult criterion_8() {
  Checker c;
  ConductorData node = conductor_exponents(BranchSystem::node());
  c.expect(node.exponents == std::vector<long long>{1, 1} && node.delta == 1,
           "node conductor wrong");
  ConductorData cusp = conductor_exponents(BranchSystem::cusp());
  c.expect(cusp.exponents == std::vector<long long>{2} && cusp.delta == 1,
           "cusp conductor wrong");
  ConductorData tac = conductor_exponents(BranchSystem::tacnode());
  c.expect(tac.exponents == std::vector<long long>{2, 2} && tac.delta == 2,
           "tacnode conductor wrong");
  c.expect(constraint_count_equals_delta(BranchSystem::node()), "node rank != delta");
  c.expect(constraint_count_equals_delta(BranchSystem::cusp()), "cusp rank != delta");
  c.expect(constraint_count_equals_delta(BranchSystem::tacnode()), "tacnode rank != delta");
  return {8, "conductor catalog: exponents, delta, constraint rank", c.pass, c.detail.str()};
}

CriterionResult criterion_9() {
  Checker c;
  BranchSystem node = BranchSystem::node();
  std::mt19937_64 rng(9009);
  for (int trial = 0; trial < 25; ++trial) {
    Rational a = rand_rational(rng);
    Rational b = trial % 2 == 0 ? -a : rand_rational(rng);
    PrincipalPartSystem eta;
    eta.k = 1;
    eta.tails = {{a}, {b}};
    c.expect(descends(node, eta) == (a + b).is_zero(), "node descent != (a + b = 0)");
  }

  BranchSystem cusp = BranchSystem::cusp();
  PrincipalPartSystem gen;
  gen.k = 1;
  gen.tails = {{Q(1), Q(0)}};
  c.expect(descends(cusp, gen), "dt/t^2 must descend on the cusp");

  Poly2 f; // y^2 - x^3
  f.add_term(0, 2, Q(1));
  f.add_term(3, 0, Q(-1));
  LaurentSeries pulled = pullback_plane_differential(f, cusp, 0);
  c.expect(LaurentSeries::agree(pulled, LaurentSeries::term(Q(1), -2)),
           "pullback of dx/(2y) is not dt/t^2");

  PrincipalPartSystem dt_over_t;
  dt_over_t.k = 1;
  dt_over_t.tails = {{Q(1)}};
  c.expect(!descends(cusp, dt_over_t), "dt/t must fail descent");
  c.expect(conductor_annihilation_check(cusp, dt_over_t), "dt/t must pass annihilation");

  Report rep = cmd_conductor(nullptr, "cusp", std::optional<std::string>("1/t"), 1, std::nullopt);
  bool warned = false;
  for (const auto& w : rep.warnings()) warned = warned || w.id == "W-CUSP-EX2-CONFLICT";
  c.expect(warned, "W-CUSP-EX2-CONFLICT not emitted for cusp dt/t");
  c.expect(!rep.all_passed(), "conductor report for dt/t must fail");
  return {9, "descent oracle: node pairing, cusp generator, pullback, warning", c.pass,
          c.detail.str()};
}

CriterionResult criterion_10() {
  Checker c;
  BranchSystem cusp = BranchSystem::cusp();
  c.expect(descends_k(cusp, {LaurentSeries::term(Q(1), -6)}, 3), "(dt)^3/t^6 must descend");
  c.expect(descends_k(cusp, {LaurentSeries::term(Q(1), -3)}, 3), "(dt)^3/t^3 must descend");
  c.expect(!descends_k(cusp, {LaurentSeries::term(Q(1), -7)}, 3),
           "(dt)^3/t^7 exceeds the 2k*delta = 6 bound");
  return {10, "Gorenstein k-th power descent on the cusp", c.pass, c.detail.str()};
}

CriterionResult criterion_11() {
  Checker c;
  std::mt19937_64 rng(1111);
  std::vector<DualGraph> graphs = {triangle(), chain3(), theta(), loops(2), loops(3)};
  for (int i = 0; i < 10; ++i) {
    graphs.push_back(random_connected_graph(rng, static_cast<int>(rand_int(rng, 1, 6)),
                                            static_cast<int>(rand_int(rng, 0, 4))));
  }
  for (size_t i = 0; i < graphs.size(); ++i) {
    c.expect(static_cast<long long>(harmonic_space(graphs[i]).size()) == betti1(graphs[i]),
             "harmonic dim != b1 on graph " + std::to_string(i));
  }
  c.expect(tropical_jacobian_dim(triangle()) == 1, "tropical Jacobian of the triangle != 1");
  return {11, "tropical: harmonic dimension b1, Jacobian dimension", c.pass, c.detail.str()};
}

Report assemble(const std::vector<CriterionResult>& results, bool determinism_ok,
                bool include_determinism) {
  Report rep("selftest", fnv1a_digest(""));
  for (const auto& r : results) {
    rep.check("criterion-" + std::to_string(r.number) + " " + r.name, r.pass, r.detail);
  }
  if (include_determinism) {
    rep.check("criterion-12 determinism: identical reports on identical input",
              determinism_ok, determinism_ok ? "" : "renders differ");
  }
  return rep;
}

} // namespace

std::vector<CriterionResult> run_acceptance_criteria() {
  return {criterion_1(), criterion_2(), criterion_3(), criterion_4(),
          criterion_5(), criterion_6(), criterion_7(), criterion_8(),
          criterion_9(), criterion_10(), criterion_11()};
}

Report selftest_report() {
  std::vector<CriterionResult> results = run_acceptance_criteria();
  // Criterion 12: recompute and re-render; the bytes must match.
  Report once = assemble(results, true, false);
  Report again = assemble(run_acceptance_criteria(), true, false);
  bool deterministic = once.text() == again.text() && once.json() == again.json();
  return assemble(results, deterministic, true);
}

} // namespace residuum
