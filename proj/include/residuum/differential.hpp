#ifndef RESIDUUM_DIFFERENTIAL_HPP
#define RESIDUUM_DIFFERENTIAL_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "residuum/laurent_series.hpp"
#include "residuum/polynomial.hpp"
#include "residuum/rational.hpp"

namespace residuum {

/// A point of the projective line: a finite rational coordinate or infinity.
class PolePoint {
public:
  static PolePoint finite(const Rational& z) { return PolePoint(z); }
  static PolePoint infinity() { return PolePoint(); }

  bool is_infinity() const { return !coord_.has_value(); }
  const Rational& coord() const { return *coord_; }

  friend bool operator==(const PolePoint& a, const PolePoint& b) { return a.coord_ == b.coord_; }
  friend bool operator<(const PolePoint& a, const PolePoint& b) {
    if (a.is_infinity() != b.is_infinity()) return b.is_infinity(); // finite < infinity
    if (a.is_infinity()) return false;
    return a.coord() < b.coord();
  }

  std::string str() const { return is_infinity() ? "inf" : coord_->str(); }

private:
  PolePoint() = default;
  explicit PolePoint(const Rational& z) : coord_(z) {}
  std::optional<Rational> coord_;
};

/// Principal part of a k-differential at a finite point: the coefficients of
/// (z-p)^(-j) (dz)^k for j = order down to 1 (leading coefficient nonzero).
struct PrincipalPart {
  Rational location;
  std::vector<Rational> coefficients; // index 0 -> order, last -> order 1

  int order() const { return static_cast<int>(coefficients.size()); }

  /// Pure order-k part a/(z-p)^k, the building block of the global
  /// constructions (coefficients below the top order all zero).
  static PrincipalPart pure(const Rational& location, const Rational& a, int k);
};

/// Meromorphic k-differential f(z) (dz)^k on a rational component, stored in
/// the finite affine chart. The infinity-chart form g(w) (dw)^k with
/// w = 1/z is always derived via to_infinity_chart, never stored.
class KDifferential {
public:
  KDifferential() : k_(1) {}
  KDifferential(int k, RationalFunction f);

  int k() const { return k_; }
  const RationalFunction& f() const { return f_; }
  bool is_zero() const { return f_.is_zero(); }

  friend bool operator==(const KDifferential& a, const KDifferential& b) {
    return a.k_ == b.k_ && a.f_ == b.f_;
  }

  KDifferential operator-() const { return KDifferential(k_, -f_); }
  friend KDifferential operator+(const KDifferential& a, const KDifferential& b);
  KDifferential scaled(const Rational& c) const { return KDifferential(k_, f_.scaled(c)); }

  std::string str(const std::string& var = "z") const;

private:
  int k_;
  RationalFunction f_;
};

/// g(w) (dw)^k with g(w) = (-1)^k w^(-2k) f(1/w); an exact involution.
KDifferential to_infinity_chart(const KDifferential& eta);

/// The k-residue at p: the coefficient of u^(-k) (du)^k in the expansion in
/// the local coordinate u (u = z - p at finite points, u = 1/z at infinity).
/// Zero at regular points and at poles missing the u^(-k) term.
Rational k_residue(const KDifferential& eta, const PolePoint& p);

/// Pole order at p (0 when regular), computed after the chart change for
/// the infinity point.
int pole_order(const KDifferential& eta, const PolePoint& p);

/// Residues keyed by pole location. Finite keys are exactly the finite
/// poles; the infinity key is always present (0 when regular there) since
/// every global bookkeeping step needs the infinity contribution.
std::map<PolePoint, Rational> all_residues(const KDifferential& eta);

/// Sum of all_residues values; the classical residue theorem says this
/// vanishes for k = 1.
Rational residue_sum(const KDifferential& eta);

/// Builds sum_parts sum_j c_j / (z - p)^j (dz)^k from prescribed principal
/// parts at pairwise distinct finite points. Throws DuplicateLocation.
KDifferential from_principal_parts(int k, const std::vector<PrincipalPart>& parts);

/// Extracts the principal part of eta at a finite point (empty when regular).
PrincipalPart principal_part_at(const KDifferential& eta, const Rational& p);

/// For pure order-k parts a_i/(z - p_i)^k, the predicted infinity residue
/// (-1)^k * sum(a_i) next to the actually computed one.
struct InfinityResidueCheck {
  Rational predicted;
  Rational actual;
};
InfinityResidueCheck infinity_residue_formula_check(
    int k, const std::vector<std::pair<Rational, Rational>>& location_value_pairs);

} // namespace residuum

#endif
