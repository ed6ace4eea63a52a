#ifndef RESIDUUM_LAURENT_SERIES_HPP
#define RESIDUUM_LAURENT_SERIES_HPP

#include <string>
#include <vector>

#include "residuum/polynomial.hpp"
#include "residuum/rational.hpp"

namespace residuum {

/// Truncated Laurent series with exact rational coefficients.
///
/// Coefficients of t^n for n >= truncation_order are *unknown*, not zero;
/// querying one raises QueryBeyondTruncation. A series that is zero up to its
/// truncation stores no coefficients and valuation == truncation_order.
/// Inputs known exactly (finite Laurent polynomials) carry the sentinel
/// truncation `kExactOrder`.
class LaurentSeries {
public:
  /// Sentinel truncation for exactly-known finite series. Large enough that
  /// products of desk-scale series never approach it, small enough that
  /// index arithmetic in 64 bits cannot overflow.
  static constexpr long long kExactOrder = 1LL << 20;

  LaurentSeries() : valuation_(kExactOrder), trunc_(kExactOrder) {}

  /// Series sum_j coeffs[j] * t^(valuation + j) + O(t^trunc).
  LaurentSeries(long long valuation, std::vector<Rational> coeffs,
                long long trunc = kExactOrder);

  static LaurentSeries zero(long long trunc) { return LaurentSeries(trunc, {}, trunc); }
  static LaurentSeries one() { return term(Rational(1), 0); }
  static LaurentSeries term(const Rational& c, long long exponent);

  long long valuation() const { return valuation_; }
  long long truncation_order() const { return trunc_; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_exact() const { return trunc_ >= kExactOrder; }

  /// Coefficient of t^n; requires n < truncation_order.
  Rational coeff(long long n) const;

  /// Coefficient of t^n, treating unknown coefficients as zero. Only for
  /// display and for principal parts, which are always below truncation.
  Rational coeff_or_zero(long long n) const;

  LaurentSeries operator-() const;
  friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b);
  friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b);
  friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);
  LaurentSeries scaled(const Rational& c) const;

  /// Substitution t -> t^e for e >= 1.
  LaurentSeries compose_power(long long e) const;

  /// Multiplicative inverse up to the computable truncation.
  /// Throws ZeroDivision when the series is zero up to its truncation.
  LaurentSeries inverted() const;

  LaurentSeries pow(long long e) const; // e >= 0

  /// Termwise derivative d/dt.
  LaurentSeries derivative() const;

  /// Re-truncates to min(trunc, new_trunc).
  LaurentSeries truncated(long long new_trunc) const;

  /// Exponents with nonzero stored coefficient.
  std::vector<long long> support() const;

  /// True when the two series agree coefficientwise below both truncations.
  static bool agree(const LaurentSeries& a, const LaurentSeries& b);

  std::string str(const std::string& var = "t") const;

private:
  void normalize();

  long long valuation_;
  std::vector<Rational> coeffs_; // coeff of t^(valuation_ + j)
  long long trunc_;
};

/// Laurent expansion of f at `center` in the local coordinate u = z - center,
/// with coefficients up to (excluding) order `trunc`.
LaurentSeries series_expand(const RationalFunction& f, const Rational& center, long long trunc);

/// Default truncation window rule used by the CLI and the conductor oracle.
long long default_truncation(long long max_conductor, long long k, long long max_pole_order);

} // namespace residuum

#endif
