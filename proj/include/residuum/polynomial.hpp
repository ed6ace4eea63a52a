#ifndef RESIDUUM_POLYNOMIAL_HPP
#define RESIDUUM_POLYNOMIAL_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "residuum/rational.hpp"

namespace residuum {

/// Dense univariate polynomial over Rational. Coefficient i multiplies z^i.
/// Trailing zero coefficients are stripped; the zero polynomial has no
/// coefficients and degree -1.
class Polynomial {
public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  static Polynomial constant(const Rational& c);
  static Polynomial monomial(const Rational& c, int degree);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(int i) const;
  const Rational& leading() const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial scaled(const Rational& c) const;
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

  /// Quotient and remainder; divisor must be nonzero.
  static std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);

  /// Monic gcd; gcd(0, 0) = 0.
  static Polynomial gcd(Polynomial a, Polynomial b);

  Polynomial derivative() const;
  Rational eval(const Rational& x) const;

  /// p(z + c), exact Taylor shift.
  Polynomial shifted(const Rational& c) const;

  /// z^deg * p(1/z), i.e. the coefficient-reversed polynomial.
  Polynomial reversed() const;

  Polynomial monic() const;

  /// Multiplicity of x as a root (0 when p(x) != 0).
  int root_multiplicity(const Rational& x) const;

  /// Deflates by (z - x)^m where m is the root multiplicity; returns m.
  int remove_root(const Rational& x);

  /// All rational roots with multiplicities, found by the rational root
  /// theorem on the primitive integer form. If `require_split` is set, a
  /// nonconstant factor without rational roots raises InvalidInput.
  std::map<Rational, int> rational_roots(bool require_split) const;

  std::string str(const std::string& var = "z") const;

private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Univariate rational function in lowest terms with monic denominator.
class RationalFunction {
public:
  RationalFunction() : num_(), den_(Polynomial::constant(Rational(1))) {}
  RationalFunction(Polynomial num, Polynomial den);
  static RationalFunction constant(const Rational& c);
  /// c / (z - p)^order, the basic principal-part building block.
  static RationalFunction pole_term(const Rational& c, const Rational& p, int order);

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RationalFunction operator-() const;
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  RationalFunction scaled(const Rational& c) const;
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  RationalFunction derivative() const;
  Rational eval(const Rational& x) const; // throws ZeroDivision at a pole

  /// f(1/z) as a rational function of z.
  RationalFunction compose_reciprocal() const;

  /// Pole order at a finite point (0 when regular there).
  int pole_order_at(const Rational& p) const;

  /// Finite pole locations with orders. Requires the denominator to split
  /// over the rationals; otherwise InvalidInput.
  std::map<Rational, int> finite_poles() const;

  std::string str(const std::string& var = "z") const;

private:
  void normalize();
  Polynomial num_;
  Polynomial den_;
};

/// Sparse bivariate polynomial in (x, y), used for plane-curve germs.
class Poly2 {
public:
  Poly2() = default;
  void add_term(int dx, int dy, const Rational& c);
  const std::map<std::pair<int, int>, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Poly2 d_dx() const;
  Poly2 d_dy() const;

  std::string str() const;

private:
  std::map<std::pair<int, int>, Rational> terms_;
};

} // namespace residuum

#endif
