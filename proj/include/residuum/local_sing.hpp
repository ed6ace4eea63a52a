#ifndef RESIDUUM_LOCAL_SING_HPP
#define RESIDUUM_LOCAL_SING_HPP

#include <map>
#include <string>
#include <vector>

#include "residuum/laurent_series.hpp"
#include "residuum/linalg.hpp"
#include "residuum/polynomial.hpp"

namespace residuum {

/// A plane-curve germ presented by branch parametrizations t -> (x(t), y(t)).
/// Parametrizations must be primitive (gcd of the exponent support of x and
/// y is 1 per branch) and pairwise distinct as germs; both are checked.
class BranchSystem {
public:
  struct Branch {
    LaurentSeries x;
    LaurentSeries y;
  };

  BranchSystem(std::vector<Branch> branches, long long truncation);

  static BranchSystem node(long long truncation = 16);
  static BranchSystem cusp(long long truncation = 16);
  static BranchSystem tacnode(long long truncation = 16);

  const std::vector<Branch>& branches() const { return branches_; }
  size_t num_branches() const { return branches_.size(); }
  long long truncation() const { return trunc_; }

private:
  std::vector<Branch> branches_;
  long long trunc_;
};

/// Truncated model of the local ring: the row-reduced span of the images of
/// the monomials x^a y^b inside the product of truncated branch power series
/// rings (degrees 0..N-1 per branch).
class LocalRingModel {
public:
  LocalRingModel(const BranchSystem& b, long long trunc);

  size_t num_branches() const { return num_branches_; }
  long long trunc() const { return trunc_; }
  const RatMatrix& basis() const { return basis_; }

  /// True when the concatenated coefficient vector lies in the model span.
  bool contains(const std::vector<Rational>& vec) const;

  /// Membership for a per-branch collection of power series (valuation >= 0
  /// required; truncated at the model's window).
  bool contains_series(const std::vector<LaurentSeries>& per_branch) const;

  /// Coefficient vector of the indicator of branch i times t^m.
  std::vector<Rational> branch_monomial(size_t branch, long long m) const;

private:
  size_t num_branches_;
  long long trunc_;
  RatMatrix basis_; // row-reduced monomial images
};

/// Conductor exponents and delta-invariant of the germ.
struct ConductorData {
  std::vector<long long> exponents; // c_i per branch
  long long delta = 0;
  long long max_exponent() const;
};

/// Polar data of a k-differential at the branches: per branch the
/// coefficients of t^(-j) (dt)^k for j = max_order down to 1.
struct PrincipalPartSystem {
  int k = 1;
  std::vector<std::vector<Rational>> tails; // tails[i][0] -> top order

  long long order_on(size_t branch) const;
  /// Coefficient of t^(-j) on the given branch (0 when absent).
  Rational coeff(size_t branch, long long j) const;
  /// The residue coefficient (j = 1).
  Rational residue(size_t branch) const { return coeff(branch, 1); }
  /// The tails as Laurent differentials g_i(t) (dt)^k, exact.
  std::vector<LaurentSeries> to_series() const;
};

LocalRingModel local_ring_model(const BranchSystem& b);

/// Minimal c_i with t^c * (branch indicator) in the local ring for every
/// c >= c_i, plus the delta-invariant; verified stable under enlarging the
/// truncation window (else TruncationTooSmall).
ConductorData conductor_exponents(const BranchSystem& b);

/// The residue-pairing descent oracle at k = 1: one linear constraint
/// sum_i Res_{t_i}(f * eta) = 0 per local-ring basis function f, expressed
/// in the polar coefficients up to the given per-branch pole bounds;
/// row-reduced.
ConstraintSystem descent_constraints(const BranchSystem& b,
                                     const std::vector<long long>& max_orders);

/// rank(descent_constraints at pole bounds c_i) == delta.
bool constraint_count_equals_delta(const BranchSystem& b);

/// Necessary check: conductor exponents bound the pole orders, i.e.
/// t^{c_i} eta_i is regular on every branch.
bool conductor_annihilation_check(const BranchSystem& b, const PrincipalPartSystem& eta);

/// The single weighted relation sum_i c_i * Res_{p_i}(eta); the caller
/// compares with zero.
Rational weighted_residue_check(const BranchSystem& b, const PrincipalPartSystem& eta);

/// True when eta's principal parts satisfy every descent constraint at its
/// own pole orders.
bool descends(const BranchSystem& b, const PrincipalPartSystem& eta);

/// A generator of the dualizing module: the descent-space element with the
/// maximal pole orders (c_i on branch i), unique up to scalar on Gorenstein
/// germs. Lower-order free coefficients are canonically zeroed.
/// Throws NotGorensteinDetected when the top-order space has dimension != 1.
PrincipalPartSystem dualizing_generator(const BranchSystem& b);

/// k-differential descent via the Gorenstein generator: eta = h * tau^k
/// with h in the local ring. eta is given per branch as g_i(t) (dt)^k.
bool descends_k(const BranchSystem& b, const std::vector<LaurentSeries>& eta, int k);

/// Pullback of dx / g(x, y) along one branch: x'(t) dt / g(x(t), y(t)).
LaurentSeries pullback_dx_over(const Poly2& g, const BranchSystem& b, size_t branch);

/// Pullback of the plane-curve dualizing generator dx / (df/dy).
LaurentSeries pullback_plane_differential(const Poly2& f, const BranchSystem& b, size_t branch);

/// Evaluates a bivariate polynomial along a branch parametrization.
LaurentSeries eval_on_branch(const Poly2& p, const LaurentSeries& x, const LaurentSeries& y);

} // namespace residuum

#endif
