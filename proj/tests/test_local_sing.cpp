#include "doctest.h"

#include <random>

#include "residuum/errors.hpp"
#include "residuum/local_sing.hpp"

using namespace residuum;

namespace {

Rational Q(long long n, long long d = 1) { return Rational(BigInt(n), BigInt(d)); }

LaurentSeries mono(long long c, long long e) { return LaurentSeries::term(Q(c), e); }

long long rand_int(std::mt19937_64& rng, long long lo, long long hi) {
  return lo + static_cast<long long>(rng() % static_cast<unsigned long long>(hi - lo + 1));
}

Rational rand_rational(std::mt19937_64& rng) {
  long long n = rand_int(rng, -9, 9);
  if (n == 0) n = 1;
  return Q(n, rand_int(rng, 1, 9));
}

} // namespace

TEST_CASE("branch system invariants") {
  // non-primitive parametrization (the 2:1 chart x = t^2, y = t^4)
  CHECK_THROWS_AS(BranchSystem({{mono(1, 2), mono(1, 4)}}, 16), InvalidInput);
  // duplicate germ, literal
  CHECK_THROWS_AS(BranchSystem({{mono(1, 1), mono(1, 2)}, {mono(1, 1), mono(1, 2)}}, 16),
                  InvalidInput);
  // duplicate germ up to reparametrization: (t, t^2) and (-s, s^2) both cover y = x^2
  CHECK_THROWS_AS(BranchSystem({{mono(1, 1), mono(1, 2)}, {mono(-1, 1), mono(1, 2)}}, 16),
                  InvalidInput);
  // constant terms are not allowed
  CHECK_THROWS_AS(BranchSystem({{LaurentSeries::one(), mono(1, 1)}}, 16), InvalidInput);
  // the catalog builds fine
  CHECK(BranchSystem::node().num_branches() == 2);
  CHECK(BranchSystem::cusp().num_branches() == 1);
  CHECK(BranchSystem::tacnode().num_branches() == 2);
}

TEST_CASE("local ring model of the node") {
  BranchSystem node = BranchSystem::node();
  LocalRingModel model = local_ring_model(node);
  // pairs (f, g) with f(0) = g(0)
  CHECK(model.contains_series({LaurentSeries::one(), LaurentSeries::one()}));
  CHECK(model.contains_series({mono(1, 1), LaurentSeries()}));
  CHECK(model.contains_series({LaurentSeries(), mono(1, 3)}));
  CHECK(!model.contains_series({LaurentSeries::one(), LaurentSeries()}));
  CHECK(!model.contains_series({LaurentSeries::one(), mono(2, 0)}));
}

TEST_CASE("local ring model of the cusp omits the linear term") {
  BranchSystem cusp = BranchSystem::cusp();
  LocalRingModel model = local_ring_model(cusp);
  CHECK(model.contains_series({LaurentSeries::one()}));
  CHECK(model.contains_series({mono(1, 2)}));
  CHECK(model.contains_series({mono(1, 3)}));
  CHECK(model.contains_series({mono(1, 4)}));
  CHECK(!model.contains_series({mono(1, 1)}));
  CHECK(!model.contains_series({mono(1, 1) + mono(1, 2)}));
}

TEST_CASE("local ring model of the tacnode matches first-order contact") {
  BranchSystem tac = BranchSystem::tacnode();
  LocalRingModel model = local_ring_model(tac);
  // pairs (A, B) with A(0) = B(0) and A'(0) = B'(0)
  CHECK(model.contains_series({mono(1, 1), mono(1, 1)}));
  CHECK(model.contains_series({mono(1, 2), LaurentSeries()}));
  CHECK(!model.contains_series({mono(1, 1), LaurentSeries()}));
  CHECK(!model.contains_series({mono(1, 1), mono(-1, 1)}));
}

TEST_CASE("conductor catalog") {
  ConductorData node = conductor_exponents(BranchSystem::node());
  CHECK(node.exponents == std::vector<long long>{1, 1});
  CHECK(node.delta == 1);

  ConductorData cusp = conductor_exponents(BranchSystem::cusp());
  CHECK(cusp.exponents == std::vector<long long>{2});
  CHECK(cusp.delta == 1);

  ConductorData tac = conductor_exponents(BranchSystem::tacnode());
  CHECK(tac.exponents == std::vector<long long>{2, 2});
  CHECK(tac.delta == 2);
}

TEST_CASE("conductor minimality") {
  // t^{c-1} * indicator is not in the ring, t^{c} is.
  struct Case {
    BranchSystem b;
    std::vector<long long> c;
  };
  std::vector<Case> cases = {{BranchSystem::node(), {1, 1}},
                             {BranchSystem::cusp(), {2}},
                             {BranchSystem::tacnode(), {2, 2}}};
  for (const auto& [b, c] : cases) {
    LocalRingModel model = local_ring_model(b);
    for (size_t i = 0; i < b.num_branches(); ++i) {
      CHECK(model.contains(model.branch_monomial(i, c[i])));
      if (c[i] > 0) CHECK(!model.contains(model.branch_monomial(i, c[i] - 1)));
    }
  }
}

TEST_CASE("conductor data is stable under larger windows") {
  for (long long n : {16LL, 20LL}) {
    CHECK(conductor_exponents(BranchSystem::node(n)).delta == 1);
    CHECK(conductor_exponents(BranchSystem::cusp(n)).exponents == std::vector<long long>{2});
    CHECK(conductor_exponents(BranchSystem::tacnode(n)).delta == 2);
  }
  ConstraintSystem a = descent_constraints(BranchSystem::tacnode(16), {2, 2});
  ConstraintSystem b = descent_constraints(BranchSystem::tacnode(20), {2, 2});
  CHECK(a.rank() == b.rank());
}

TEST_CASE("descent constraints: node gives a + b = 0") {
  BranchSystem node = BranchSystem::node();
  ConstraintSystem sys = descent_constraints(node, {1, 1});
  CHECK(sys.rank() == 1);
  CHECK(sys.satisfied_by({Q(2), Q(-2)}));
  CHECK(!sys.satisfied_by({Q(2), Q(2)}));
  CHECK(!sys.satisfied_by({Q(1), Q(0)}));
}

TEST_CASE("descent constraints: cusp frees the double pole, kills the residue") {
  BranchSystem cusp = BranchSystem::cusp();
  ConstraintSystem sys = descent_constraints(cusp, {2});
  // variables: coefficient of t^-2, then t^-1
  CHECK(sys.rank() == 1);
  CHECK(sys.satisfied_by({Q(1), Q(0)})); // dt/t^2 descends
  CHECK(sys.satisfied_by({Q(7, 3), Q(0)}));
  CHECK(!sys.satisfied_by({Q(0), Q(1)})); // dt/t does not
  CHECK(!sys.satisfied_by({Q(1), Q(1)}));
}

TEST_CASE("descent constraints: tacnode pairs both orders") {
  BranchSystem tac = BranchSystem::tacnode();
  ConstraintSystem sys = descent_constraints(tac, {2, 2});
  CHECK(sys.rank() == 2);
  // variables: (a2, a1, b2, b1); constraints a2 + b2 = 0 and a1 + b1 = 0
  CHECK(sys.satisfied_by({Q(1), Q(0), Q(-1), Q(0)}));
  CHECK(sys.satisfied_by({Q(1), Q(2), Q(-1), Q(-2)}));
  CHECK(!sys.satisfied_by({Q(1), Q(0), Q(1), Q(0)}));
  CHECK(!sys.satisfied_by({Q(0), Q(1), Q(0), Q(1)}));
}

TEST_CASE("constraint rank equals delta on the catalog") {
  CHECK(constraint_count_equals_delta(BranchSystem::node()));
  CHECK(constraint_count_equals_delta(BranchSystem::cusp()));
  CHECK(constraint_count_equals_delta(BranchSystem::tacnode()));
}

TEST_CASE("annihilation is necessary but not sufficient") {
  BranchSystem cusp = BranchSystem::cusp();
  PrincipalPartSystem dt_over_t;
  dt_over_t.k = 1;
  dt_over_t.tails = {{Q(1)}}; // dt/t
  CHECK(conductor_annihilation_check(cusp, dt_over_t)); // order 1 <= c = 2
  CHECK(!descends(cusp, dt_over_t));
  CHECK(weighted_residue_check(cusp, dt_over_t) == Q(2)); // 2 * 1

  PrincipalPartSystem gen;
  gen.k = 1;
  gen.tails = {{Q(1), Q(0)}}; // dt/t^2
  CHECK(conductor_annihilation_check(cusp, gen));
  CHECK(descends(cusp, gen));
  CHECK(weighted_residue_check(cusp, gen) == Q(0));

  PrincipalPartSystem too_deep;
  too_deep.k = 1;
  too_deep.tails = {{Q(1), Q(0), Q(0)}}; // dt/t^3
  CHECK(!conductor_annihilation_check(cusp, too_deep));
  CHECK(!descends(cusp, too_deep));
}

TEST_CASE("weighted residues on node and tacnode") {
  PrincipalPartSystem balanced;
  balanced.k = 1;
  balanced.tails = {{Q(5)}, {Q(-5)}};
  CHECK(weighted_residue_check(BranchSystem::node(), balanced) == Q(0));

  PrincipalPartSystem log_pair; // (2 du/u, -2 dv/v): order 1 = c_i
  log_pair.k = 1;
  log_pair.tails = {{Q(2)}, {Q(-2)}};
  CHECK(conductor_annihilation_check(BranchSystem::node(), log_pair));
  CHECK(descends(BranchSystem::node(), log_pair));

  PrincipalPartSystem tac_balanced;
  tac_balanced.k = 1;
  tac_balanced.tails = {{Q(0), Q(3)}, {Q(0), Q(-3)}};
  CHECK(weighted_residue_check(BranchSystem::tacnode(), tac_balanced) == Q(0)); // 2r - 2r

  PrincipalPartSystem unbalanced;
  unbalanced.k = 1;
  unbalanced.tails = {{Q(1)}, {Q(1)}};
  CHECK(weighted_residue_check(BranchSystem::node(), unbalanced) == Q(2));
}

TEST_CASE("descent implies annihilation and weighted vanishing") {
  std::mt19937_64 rng(131);
  std::vector<BranchSystem> catalog = {BranchSystem::node(), BranchSystem::cusp(),
                                       BranchSystem::tacnode()};
  for (const auto& b : catalog) {
    ConductorData cond = conductor_exponents(b);
    for (int trial = 0; trial < 40; ++trial) {
      PrincipalPartSystem eta;
      eta.k = 1;
      for (size_t i = 0; i < b.num_branches(); ++i) {
        std::vector<Rational> tail;
        for (long long j = 0; j < cond.exponents[i]; ++j) {
          tail.push_back(rand_int(rng, 0, 1) == 0 ? Q(0) : rand_rational(rng));
        }
        eta.tails.push_back(tail);
      }
      if (descends(b, eta)) {
        CHECK(conductor_annihilation_check(b, eta));
        CHECK(weighted_residue_check(b, eta) == Q(0));
      }
    }
  }
}

TEST_CASE("dualizing generators") {
  PrincipalPartSystem node_gen = dualizing_generator(BranchSystem::node());
  CHECK(node_gen.tails == std::vector<std::vector<Rational>>{{Q(1)}, {Q(-1)}});

  PrincipalPartSystem cusp_gen = dualizing_generator(BranchSystem::cusp());
  CHECK(cusp_gen.tails == std::vector<std::vector<Rational>>{{Q(1), Q(0)}});

  PrincipalPartSystem tac_gen = dualizing_generator(BranchSystem::tacnode());
  CHECK(tac_gen.tails.size() == 2);
  CHECK(tac_gen.coeff(0, 2) == Q(1));
  CHECK(tac_gen.coeff(1, 2) == Q(-1));
  CHECK(tac_gen.coeff(0, 1) == -tac_gen.coeff(1, 1)); // residues paired
  CHECK(descends(BranchSystem::tacnode(), tac_gen));
}

TEST_CASE("gorenstein k-th power descent on the cusp") {
  BranchSystem cusp = BranchSystem::cusp();
  CHECK(descends_k(cusp, {mono(1, -6)}, 3));                // (dt)^3/t^6 = tau^3
  CHECK(descends_k(cusp, {mono(1, -3)}, 3));                // (dt)^3/t^3 = t^3 tau^3
  CHECK(!descends_k(cusp, {mono(1, -7)}, 3));               // beyond 2k*delta = 6
  CHECK(descends_k(cusp, {mono(1, -6) + mono(1, -4)}, 3));  // h = 1 + t^2, in the ring
  CHECK(!descends_k(cusp, {mono(1, -6) + mono(1, -5)}, 3)); // h = 1 + t, not in the ring
}

TEST_CASE("k = 1 gorenstein descent agrees with the residue-pairing oracle") {
  std::mt19937_64 rng(137);
  std::vector<BranchSystem> catalog = {BranchSystem::node(), BranchSystem::cusp(),
                                       BranchSystem::tacnode()};
  for (const auto& b : catalog) {
    ConductorData cond = conductor_exponents(b);
    for (int trial = 0; trial < 30; ++trial) {
      PrincipalPartSystem eta;
      eta.k = 1;
      for (size_t i = 0; i < b.num_branches(); ++i) {
        std::vector<Rational> tail;
        for (long long j = 0; j < cond.exponents[i]; ++j) {
          tail.push_back(rand_int(rng, 0, 1) == 0 ? Q(0) : rand_rational(rng));
        }
        eta.tails.push_back(tail);
      }
      CHECK(descends(b, eta) == descends_k(b, eta.to_series(), 1));
    }
  }
}

TEST_CASE("local dimension identity") {
  std::vector<BranchSystem> catalog = {BranchSystem::node(), BranchSystem::cusp(),
                                       BranchSystem::tacnode()};
  for (const auto& b : catalog) {
    ConductorData cond = conductor_exponents(b);
    ConstraintSystem sys = descent_constraints(b, cond.exponents);
    long long dof = 0;
    for (long long c : cond.exponents) dof += c;
    CHECK(static_cast<long long>(sys.rank()) == cond.delta);
    CHECK(dof - static_cast<long long>(sys.rank()) == static_cast<long long>(sys.nullity()));
  }
}

TEST_CASE("pullbacks along the cusp") {
  BranchSystem cusp = BranchSystem::cusp();
  // f = y^2 - x^3, generator dx/(df/dy) = dx/(2y): pullback dt/t^2
  Poly2 f;
  f.add_term(0, 2, Q(1));
  f.add_term(3, 0, Q(-1));
  LaurentSeries w = pullback_plane_differential(f, cusp, 0);
  CHECK(LaurentSeries::agree(w, mono(1, -2)));

  // un-normalized generator dx/y: 2 dt/t^2
  Poly2 y;
  y.add_term(0, 1, Q(1));
  LaurentSeries w2 = pullback_dx_over(y, cusp, 0);
  CHECK(LaurentSeries::agree(w2, mono(2, -2)));
}

TEST_CASE("pullback along a node branch of f = xy") {
  BranchSystem node = BranchSystem::node();
  Poly2 f;
  f.add_term(1, 1, Q(1)); // xy, so df/dy = x
  LaurentSeries w = pullback_plane_differential(f, node, 0);
  CHECK(LaurentSeries::agree(w, mono(1, -1))); // dt/t
  // on the branch x = 0, df/dy = x vanishes identically
  CHECK_THROWS_AS(pullback_plane_differential(f, node, 1), ZeroDivision);
}

TEST_CASE("descent rejects truncation-starved inputs") {
  BranchSystem cusp = BranchSystem::cusp(8);
  CHECK_THROWS_AS(descent_constraints(cusp, {9}), TruncationTooSmall);
}

// Germs beyond the named catalog, checked against the semigroup/contact
// computations done by hand.

TEST_CASE("higher cusp y^3 = x^4") {
  // semigroup <3,4> has gaps {1,2,5}: delta = 3, conductor exponent 6
  BranchSystem e6({{mono(1, 3), mono(1, 4)}}, 18);
  ConductorData cond = conductor_exponents(e6);
  CHECK(cond.exponents == std::vector<long long>{6});
  CHECK(cond.delta == 3);
  CHECK(constraint_count_equals_delta(e6));

  // dx/(df/dy) with f = y^3 - x^4 pulls back to dt/t^6
  Poly2 f;
  f.add_term(0, 3, Q(1));
  f.add_term(4, 0, Q(-1));
  CHECK(LaurentSeries::agree(pullback_plane_differential(f, e6, 0), mono(1, -6)));

  PrincipalPartSystem tau = dualizing_generator(e6);
  CHECK(tau.tails[0].size() == 6);
  CHECK(tau.coeff(0, 6) == Q(1));
  CHECK(descends(e6, tau));
  // the pulled-back plane generator itself satisfies the descent oracle
  PrincipalPartSystem plane_gen;
  plane_gen.k = 1;
  plane_gen.tails = {{Q(1), Q(0), Q(0), Q(0), Q(0), Q(0)}};
  CHECK(descends(e6, plane_gen));
}

TEST_CASE("higher tacnode y^2 = x^6") {
  // two smooth branches with third-order contact: exponents (3,3), delta 3
  BranchSystem a5({{mono(1, 1), mono(1, 3)}, {mono(1, 1), mono(-1, 3)}}, 18);
  ConductorData cond = conductor_exponents(a5);
  CHECK(cond.exponents == std::vector<long long>{3, 3});
  CHECK(cond.delta == 3);
  ConstraintSystem sys = descent_constraints(a5, cond.exponents);
  CHECK(sys.rank() == 3); // all three orders paired across the branches
  CHECK(sys.satisfied_by({Q(1), Q(2), Q(3), Q(-1), Q(-2), Q(-3)}));
  CHECK(!sys.satisfied_by({Q(1), Q(0), Q(0), Q(1), Q(0), Q(0)}));

  PrincipalPartSystem tau = dualizing_generator(a5);
  CHECK(tau.coeff(0, 3) == -tau.coeff(1, 3));
  CHECK(descends(a5, tau));
}

TEST_CASE("ordinary triple point x y (x - y) = 0") {
  BranchSystem triple({{mono(1, 1), LaurentSeries()},
                       {LaurentSeries(), mono(1, 1)},
                       {mono(1, 1), mono(1, 1)}},
                      16);
  ConductorData cond = conductor_exponents(triple);
  CHECK(cond.exponents == std::vector<long long>{2, 2, 2});
  CHECK(cond.delta == 3);
  CHECK(constraint_count_equals_delta(triple));

  // the three constraints: residues sum to zero, and each double-pole
  // coefficient pairs with the diagonal branch
  ConstraintSystem sys = descent_constraints(triple, cond.exponents);
  CHECK(sys.rank() == 3);
  // (a2, a1, b2, b1, c2, c1) with a2 = b2 = -c2 and a1 + b1 + c1 = 0
  CHECK(sys.satisfied_by({Q(1), Q(2), Q(1), Q(-5), Q(-1), Q(3)}));
  CHECK(!sys.satisfied_by({Q(1), Q(0), Q(1), Q(0), Q(1), Q(0)}));

  PrincipalPartSystem tau = dualizing_generator(triple);
  CHECK(tau.coeff(0, 2) == tau.coeff(1, 2));
  CHECK(tau.coeff(2, 2) == -tau.coeff(0, 2));
  CHECK(weighted_residue_check(triple, tau) == Q(0));
}

TEST_CASE("a smooth branch has trivial conductor and no polar generator") {
  BranchSystem smooth({{mono(1, 1), mono(1, 2)}}, 16);
  ConductorData cond = conductor_exponents(smooth);
  CHECK(cond.exponents == std::vector<long long>{0});
  CHECK(cond.delta == 0);
  CHECK_THROWS_AS(dualizing_generator(smooth), NotGorensteinDetected);
}
