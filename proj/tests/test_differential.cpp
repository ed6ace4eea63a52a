#include "doctest.h"

#include <random>

#include "residuum/differential.hpp"
#include "residuum/errors.hpp"
#include "residuum/expr_parse.hpp"

using namespace residuum;

namespace {

Rational Q(long long n, long long d = 1) { return Rational(BigInt(n), BigInt(d)); }

KDifferential diff(int k, const std::string& text) {
  return KDifferential(k, parse_rational_function(text, "z"));
}

long long rand_int(std::mt19937_64& rng, long long lo, long long hi) {
  return lo + static_cast<long long>(rng() % static_cast<unsigned long long>(hi - lo + 1));
}

Rational rand_rational(std::mt19937_64& rng) {
  long long n = rand_int(rng, -9, 9);
  if (n == 0) n = 1;
  return Q(n, rand_int(rng, 1, 9));
}

// Random differential with poles at rational points (denominator split by
// construction) plus a small polynomial tail.
KDifferential random_k1_differential(std::mt19937_64& rng) {
  std::vector<PrincipalPart> parts;
  long long npoles = rand_int(rng, 0, 3);
  std::vector<Rational> used;
  for (long long i = 0; i < npoles; ++i) {
    Rational p = Q(rand_int(rng, -4, 4));
    bool dup = false;
    for (const auto& u : used) dup = dup || u == p;
    if (dup) continue;
    used.push_back(p);
    PrincipalPart part;
    part.location = p;
    long long order = rand_int(rng, 1, 3);
    for (long long j = 0; j < order; ++j) {
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

} // namespace

TEST_CASE("k_residue on the catalog examples") {
  CHECK(k_residue(diff(3, "1/z^3"), PolePoint::finite(Q(0))) == Q(1));
  CHECK(k_residue(diff(3, "1/z^3"), PolePoint::infinity()) == Q(-1));
  CHECK(k_residue(diff(3, "1/z^6"), PolePoint::finite(Q(0))) == Q(0));
  CHECK(k_residue(diff(1, "1/z^2"), PolePoint::finite(Q(0))) == Q(0));
  CHECK(k_residue(diff(1, "1/z"), PolePoint::finite(Q(1))) == Q(0)); // regular point
}

TEST_CASE("to_infinity_chart") {
  CHECK(to_infinity_chart(diff(3, "1/z^3")) == diff(3, "-1/z^3"));
  for (int k = 1; k <= 6; ++k) {
    std::string f = "1/z^" + std::to_string(k);
    KDifferential eta(k, parse_rational_function(f, "z"));
    KDifferential inf = to_infinity_chart(eta);
    RationalFunction expected = parse_rational_function(f, "z");
    if (k % 2 != 0) expected = -expected;
    CHECK(inf.f() == expected);
  }
  CHECK(to_infinity_chart(diff(1, "1")) == diff(1, "-1/z^2"));
}

TEST_CASE("chart change is an involution") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    KDifferential eta = random_k1_differential(rng);
    CHECK(to_infinity_chart(to_infinity_chart(eta)) == eta);
  }
  KDifferential q(4, parse_rational_function("(z^2+3)/(z^5-z)", "z"));
  CHECK(to_infinity_chart(to_infinity_chart(q)) == q);
}

TEST_CASE("all_residues") {
  auto r1 = all_residues(diff(3, "1/z^3"));
  CHECK(r1.size() == 2);
  CHECK(r1.at(PolePoint::finite(Q(0))) == Q(1));
  CHECK(r1.at(PolePoint::infinity()) == Q(-1));

  auto r2 = all_residues(diff(1, "1/(z*(z-1))"));
  CHECK(r2.at(PolePoint::finite(Q(0))) == Q(-1));
  CHECK(r2.at(PolePoint::finite(Q(1))) == Q(1));
  CHECK(r2.at(PolePoint::infinity()) == Q(0));

  // (dz)^2: pole of order 4 at infinity but vanishing second-order residue
  auto r3 = all_residues(diff(2, "1"));
  CHECK(r3.size() == 1);
  CHECK(r3.at(PolePoint::infinity()) == Q(0));
  CHECK(pole_order(diff(2, "1"), PolePoint::infinity()) == 4);
}

TEST_CASE("residue_sum") {
  CHECK(residue_sum(diff(1, "1/z - 1/(z-1)")) == Q(0));
  CHECK(residue_sum(diff(3, "1/z^3")) == Q(0));
}

TEST_CASE("k=1 residue theorem on random rational differentials") {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 200; ++trial) {
    CHECK(residue_sum(random_k1_differential(rng)) == Q(0));
  }
}

TEST_CASE("even k breaks the residue-sum vanishing") {
  // (a/z^2 + b/(z-1)^2)(dz)^2 has total residue 2(a+b)
  Rational a = Q(3, 2);
  Rational b = Q(5);
  std::vector<PrincipalPart> parts = {PrincipalPart::pure(Q(0), a, 2),
                                      PrincipalPart::pure(Q(1), b, 2)};
  KDifferential eta = from_principal_parts(2, parts);
  CHECK(residue_sum(eta) == (a + b) * Q(2));
}

TEST_CASE("from_principal_parts") {
  CHECK(from_principal_parts(3, {PrincipalPart::pure(Q(0), Q(1), 3)}).f() ==
        parse_rational_function("1/z^3", "z"));
  // the cyclic-curve eta_1 at k = 1
  Rational a12 = Q(2), a31 = Q(-5, 3);
  KDifferential eta = from_principal_parts(1, {{Q(0), {a12}}, {Q(1), {a31}}});
  CHECK(eta.f() == parse_rational_function("2/z - (5/3)/(z-1)", "z"));
  CHECK(from_principal_parts(1, {}).is_zero());
  CHECK_THROWS_AS(from_principal_parts(1, {{Q(0), {Q(1)}}, {Q(0), {Q(2)}}}),
                  DuplicateLocation);
}

TEST_CASE("from_principal_parts is a section of principal-part extraction") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<PrincipalPart> parts;
    std::vector<Rational> used;
    for (long long i = 0, n = rand_int(rng, 1, 3); i < n; ++i) {
      Rational p = Q(rand_int(rng, -3, 3));
      bool dup = false;
      for (const auto& u : used) dup = dup || u == p;
      if (dup) continue;
      used.push_back(p);
      PrincipalPart part;
      part.location = p;
      for (long long j = 0, m = rand_int(rng, 1, 3); j < m; ++j) {
        part.coefficients.push_back(rand_rational(rng));
      }
      parts.push_back(part);
    }
    int k = static_cast<int>(rand_int(rng, 1, 4));
    KDifferential eta = from_principal_parts(k, parts);
    for (const auto& part : parts) {
      PrincipalPart back = principal_part_at(eta, part.location);
      CHECK(back.coefficients == part.coefficients);
    }
  }
}

TEST_CASE("k_residue is linear") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    KDifferential eta = random_k1_differential(rng);
    KDifferential xi = random_k1_differential(rng);
    Rational alpha = rand_rational(rng);
    Rational beta = rand_rational(rng);
    PolePoint p = trial % 3 == 0 ? PolePoint::infinity()
                                 : PolePoint::finite(Q(rand_int(rng, -4, 4)));
    KDifferential combo = eta.scaled(alpha) + xi.scaled(beta);
    CHECK(k_residue(combo, p) == alpha * k_residue(eta, p) + beta * k_residue(xi, p));
  }
}

TEST_CASE("infinity residue formula") {
  auto c1 = infinity_residue_formula_check(1, {{Q(0), Q(2)}, {Q(1), Q(-2)}});
  CHECK(c1.predicted == Q(0));
  CHECK(c1.actual == Q(0));

  auto c2 = infinity_residue_formula_check(3, {{Q(0), Q(1)}});
  CHECK(c2.predicted == Q(-1));
  CHECK(c2.actual == Q(-1));

  auto c3 = infinity_residue_formula_check(2, {{Q(0), Q(1)}, {Q(1), Q(1)}});
  CHECK(c3.predicted == Q(2));
  CHECK(c3.actual == Q(2));
}

TEST_CASE("odd-k pure constructions balance globally") {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 30; ++trial) {
    int k = trial % 2 == 0 ? 1 : 3;
    std::vector<PrincipalPart> parts;
    std::vector<Rational> used;
    for (long long i = 0, n = rand_int(rng, 1, 4); i < n; ++i) {
      Rational p = Q(rand_int(rng, -5, 5));
      bool dup = false;
      for (const auto& u : used) dup = dup || u == p;
      if (dup) continue;
      used.push_back(p);
      std::vector<Rational> cs(static_cast<size_t>(k), Q(0));
      cs.front() = rand_rational(rng);
      parts.push_back({p, cs});
    }
    CHECK(residue_sum(from_principal_parts(k, parts)) == Q(0));
  }
}
