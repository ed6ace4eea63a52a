#include "residuum/differential.hpp"

#include <set>

#include "residuum/errors.hpp"

namespace residuum {

KDifferential::KDifferential(int k, RationalFunction f) : k_(k), f_(std::move(f)) {
  if (k < 1) throw InvalidInput("k-differential requires k >= 1");
}

KDifferential operator+(const KDifferential& a, const KDifferential& b) {
  if (a.k_ != b.k_) throw InvalidInput("adding k-differentials of different k");
  return KDifferential(a.k_, a.f_ + b.f_);
}

std::string KDifferential::str(const std::string& var) const {
  std::string d = "(d" + var + ")";
  if (k_ > 1) d += "^" + std::to_string(k_);
  return f_.str(var) + " " + d;
}

KDifferential to_infinity_chart(const KDifferential& eta) {
  // dz = -dw/w^2, so f(z)(dz)^k = (-1)^k w^(-2k) f(1/w) (dw)^k.
  RationalFunction g = eta.f().compose_reciprocal();
  RationalFunction wpow(Polynomial::constant(Rational(1)),
                        Polynomial::monomial(Rational(1), 2 * eta.k()));
  g = g * wpow;
  if (eta.k() % 2 != 0) g = -g;
  return KDifferential(eta.k(), g);
}

Rational k_residue(const KDifferential& eta, const PolePoint& p) {
  const KDifferential* local = &eta;
  KDifferential at_inf;
  Rational center(0);
  if (p.is_infinity()) {
    at_inf = to_infinity_chart(eta);
    local = &at_inf;
  } else {
    center = p.coord();
  }
  if (local->is_zero()) return Rational(0);
  LaurentSeries s = series_expand(local->f(), center, -eta.k() + 2);
  return s.coeff(-eta.k());
}

int pole_order(const KDifferential& eta, const PolePoint& p) {
  if (p.is_infinity()) return to_infinity_chart(eta).f().pole_order_at(Rational(0));
  return eta.f().pole_order_at(p.coord());
}

std::map<PolePoint, Rational> all_residues(const KDifferential& eta) {
  std::map<PolePoint, Rational> out;
  for (const auto& [p, order] : eta.f().finite_poles()) {
    out.emplace(PolePoint::finite(p), k_residue(eta, PolePoint::finite(p)));
  }
  out.emplace(PolePoint::infinity(), k_residue(eta, PolePoint::infinity()));
  return out;
}

Rational residue_sum(const KDifferential& eta) {
  Rational s(0);
  for (const auto& [p, r] : all_residues(eta)) s += r;
  return s;
}

KDifferential from_principal_parts(int k, const std::vector<PrincipalPart>& parts) {
  std::set<Rational> seen;
  RationalFunction f;
  for (const PrincipalPart& part : parts) {
    if (!seen.insert(part.location).second) {
      throw DuplicateLocation("two principal parts at z = " + part.location.str());
    }
    int order = part.order();
    for (int i = 0; i < order; ++i) {
      const Rational& c = part.coefficients[static_cast<size_t>(i)];
      if (c.is_zero()) continue;
      f = f + RationalFunction::pole_term(c, part.location, order - i);
    }
  }
  return KDifferential(k, f);
}

PrincipalPart principal_part_at(const KDifferential& eta, const Rational& p) {
  PrincipalPart part;
  part.location = p;
  int order = eta.f().pole_order_at(p);
  if (order == 0) return part;
  LaurentSeries s = series_expand(eta.f(), p, 0);
  for (int j = order; j >= 1; --j) part.coefficients.push_back(s.coeff(-j));
  return part;
}

PrincipalPart PrincipalPart::pure(const Rational& location, const Rational& a, int k) {
  PrincipalPart p;
  p.location = location;
  if (!a.is_zero()) {
    p.coefficients.assign(static_cast<size_t>(k), Rational(0));
    p.coefficients.front() = a;
  }
  return p;
}

InfinityResidueCheck infinity_residue_formula_check(
    int k, const std::vector<std::pair<Rational, Rational>>& location_value_pairs) {
  Rational sum(0);
  std::vector<PrincipalPart> parts;
  for (const auto& [loc, a] : location_value_pairs) {
    sum += a;
    parts.push_back(PrincipalPart::pure(loc, a, k));
  }
  InfinityResidueCheck chk;
  chk.predicted = (k % 2 == 0) ? sum : -sum;
  chk.actual = k_residue(from_principal_parts(k, parts), PolePoint::infinity());
  return chk;
}

} // namespace residuum
