#include "residuum/local_sing.hpp"

#include <algorithm>
#include <numeric>

#include "residuum/errors.hpp"

namespace residuum {

namespace {

constexpr long long kMinWindow = 6;

// a(b(t)) for a power series a (valuation >= 0) and b with valuation >= 1.
LaurentSeries compose(const LaurentSeries& a, const LaurentSeries& b) {
  if (a.is_zero()) return a;
  if (b.is_zero() || b.valuation() < 1) {
    throw Error(Error::Kind::internal, "series composition needs inner valuation >= 1");
  }
  long long trunc = std::min(a.is_exact() ? LaurentSeries::kExactOrder
                                          : a.truncation_order() * b.valuation(),
                             b.truncation_order());
  LaurentSeries acc;
  for (long long n = a.support().back() + 1; n-- > 0;) {
    acc = (acc * b).truncated(trunc);
    acc = acc + LaurentSeries::term(a.coeff_or_zero(n), 0);
  }
  return acc.truncated(trunc);
}

// Compositional inverse of a valuation-1 series, to the given window.
LaurentSeries reversion(const LaurentSeries& s, long long window) {
  Rational c1 = s.coeff_or_zero(1);
  if (c1.is_zero()) throw Error(Error::Kind::internal, "reversion needs valuation 1");
  LaurentSeries sigma = LaurentSeries::term(c1.inverse(), 1);
  for (long long n = 2; n < window; ++n) {
    LaurentSeries r = compose(s.truncated(window), sigma);
    Rational rn = r.coeff_or_zero(n);
    if (!rn.is_zero()) sigma = sigma + LaurentSeries::term(-rn / c1, n);
  }
  return sigma.truncated(window);
}

// Germ normal form of a smooth branch: reparametrize so the valuation-1
// coordinate becomes exactly t. Non-smooth branches are left as-is.
std::pair<LaurentSeries, LaurentSeries> germ_normal_form(const BranchSystem::Branch& br,
                                                         long long window) {
  const LaurentSeries& x = br.x;
  const LaurentSeries& y = br.y;
  if (!x.is_zero() && x.valuation() == 1) {
    LaurentSeries sigma = reversion(x, window);
    return {compose(x.truncated(window), sigma), compose(y.truncated(window), sigma)};
  }
  if (!y.is_zero() && y.valuation() == 1) {
    LaurentSeries sigma = reversion(y, window);
    return {compose(x.truncated(window), sigma), compose(y.truncated(window), sigma)};
  }
  return {x.truncated(window), y.truncated(window)};
}

} // namespace

BranchSystem::BranchSystem(std::vector<Branch> branches, long long truncation)
    : branches_(std::move(branches)), trunc_(truncation) {
  if (branches_.empty()) throw InvalidInput("branch system needs at least one branch");
  if (trunc_ < kMinWindow) throw TruncationTooSmall("truncation window must be at least 6");
  for (size_t i = 0; i < branches_.size(); ++i) {
    const Branch& br = branches_[i];
    if (br.x.is_zero() && br.y.is_zero()) {
      throw InvalidInput("branch " + std::to_string(i) + " is the zero parametrization");
    }
    if ((!br.x.is_zero() && br.x.valuation() < 1) ||
        (!br.y.is_zero() && br.y.valuation() < 1)) {
      throw InvalidInput("branch " + std::to_string(i) +
                         " must vanish at t = 0 (valuation >= 1)");
    }
    // Primitivity: a proper-power reparametrization t -> t^d would leave all
    // exponents divisible by d and would not be a normalization chart.
    long long g = 0;
    for (long long e : br.x.support()) g = std::gcd(g, e);
    for (long long e : br.y.support()) g = std::gcd(g, e);
    if (g != 1) {
      throw InvalidInput("branch " + std::to_string(i) +
                         " is not a primitive parametrization (exponent gcd " +
                         std::to_string(g) + ")");
    }
  }
  long long window = trunc_;
  for (size_t i = 0; i < branches_.size(); ++i) {
    auto ni = germ_normal_form(branches_[i], window);
    for (size_t j = i + 1; j < branches_.size(); ++j) {
      auto nj = germ_normal_form(branches_[j], window);
      if (LaurentSeries::agree(ni.first, nj.first) &&
          LaurentSeries::agree(ni.second, nj.second)) {
        throw InvalidInput("branches " + std::to_string(i) + " and " + std::to_string(j) +
                           " define the same germ up to truncation");
      }
    }
  }
}

BranchSystem BranchSystem::node(long long truncation) {
  return BranchSystem({{LaurentSeries::term(Rational(1), 1), LaurentSeries()},
                       {LaurentSeries(), LaurentSeries::term(Rational(1), 1)}},
                      truncation);
}

BranchSystem BranchSystem::cusp(long long truncation) {
  return BranchSystem({{LaurentSeries::term(Rational(1), 2), LaurentSeries::term(Rational(1), 3)}},
                      truncation);
}

BranchSystem BranchSystem::tacnode(long long truncation) {
  return BranchSystem({{LaurentSeries::term(Rational(1), 1), LaurentSeries::term(Rational(1), 2)},
                       {LaurentSeries::term(Rational(1), 1), LaurentSeries::term(Rational(-1), 2)}},
                      truncation);
}

LocalRingModel::LocalRingModel(const BranchSystem& b, long long trunc)
    : num_branches_(b.num_branches()), trunc_(trunc) {
  const long long N = trunc;
  const size_t width = num_branches_ * static_cast<size_t>(N);

  auto branch_val = [&](const LaurentSeries& s) {
    return s.is_zero() ? LaurentSeries::kExactOrder : s.valuation();
  };

  RatMatrix rows(0, width);
  std::vector<Rational> row(width, Rational(0));
  for (long long a = 0; a <= N; ++a) {
    // Smallest possible image valuation only grows with b; stop early.
    bool any_for_a = false;
    for (long long bb = 0; bb <= N; ++bb) {
      long long min_val = LaurentSeries::kExactOrder;
      for (const auto& br : b.branches()) {
        long long v = a * branch_val(br.x) + bb * branch_val(br.y);
        min_val = std::min(min_val, v);
      }
      if (min_val >= N) {
        if (bb == 0 && !any_for_a) break; // larger a only increases valuations
        continue;
      }
      any_for_a = true;
      std::fill(row.begin(), row.end(), Rational(0));
      for (size_t i = 0; i < b.branches().size(); ++i) {
        const auto& br = b.branches()[i];
        LaurentSeries img = br.x.pow(a).truncated(N) * br.y.pow(bb).truncated(N);
        for (long long n = 0; n < N; ++n) {
          row[i * static_cast<size_t>(N) + static_cast<size_t>(n)] = img.coeff_or_zero(n);
        }
      }
      rows.append_row(row);
    }
  }
  std::vector<size_t> pivots;
  RatMatrix reduced = rows.rref(&pivots);
  basis_ = RatMatrix(pivots.size(), width);
  for (size_t r = 0; r < pivots.size(); ++r) {
    for (size_t c = 0; c < width; ++c) basis_.at(r, c) = reduced.at(r, c);
  }
}

bool LocalRingModel::contains(const std::vector<Rational>& vec) const {
  return basis_.row_space_contains(vec);
}

bool LocalRingModel::contains_series(const std::vector<LaurentSeries>& per_branch) const {
  if (per_branch.size() != num_branches_) {
    throw Error(Error::Kind::internal, "wrong number of branch series");
  }
  std::vector<Rational> vec(num_branches_ * static_cast<size_t>(trunc_), Rational(0));
  for (size_t i = 0; i < num_branches_; ++i) {
    const LaurentSeries& s = per_branch[i];
    if (!s.is_zero() && s.valuation() < 0) return false;
    if (!s.is_exact() && s.truncation_order() < trunc_) {
      throw TruncationTooSmall("series known only to O(t^" +
                               std::to_string(s.truncation_order()) +
                               ") but the ring model window is " + std::to_string(trunc_));
    }
    for (long long n = 0; n < trunc_; ++n) {
      vec[i * static_cast<size_t>(trunc_) + static_cast<size_t>(n)] = s.coeff_or_zero(n);
    }
  }
  return contains(vec);
}

std::vector<Rational> LocalRingModel::branch_monomial(size_t branch, long long m) const {
  std::vector<Rational> vec(num_branches_ * static_cast<size_t>(trunc_), Rational(0));
  vec[branch * static_cast<size_t>(trunc_) + static_cast<size_t>(m)] = Rational(1);
  return vec;
}

long long ConductorData::max_exponent() const {
  long long m = 0;
  for (long long c : exponents) m = std::max(m, c);
  return m;
}

LocalRingModel local_ring_model(const BranchSystem& b) {
  return LocalRingModel(b, b.truncation());
}

namespace {

struct ConductorAttempt {
  std::vector<long long> exponents;
  long long delta;
  bool ok;
};

ConductorAttempt conductor_at_window(const BranchSystem& b, long long window) {
  LocalRingModel model(b, window);
  ConductorAttempt out;
  out.ok = true;
  out.delta = static_cast<long long>(b.num_branches()) * window -
              static_cast<long long>(model.basis().rows());
  for (size_t i = 0; i < b.num_branches(); ++i) {
    long long c = window;
    for (long long m = window; m-- > 0;) {
      if (model.contains(model.branch_monomial(i, m))) {
        c = m;
      } else {
        break;
      }
    }
    if (c >= window) {
      out.ok = false; // no stable tail inside the window
      c = window;
    }
    out.exponents.push_back(c);
  }
  return out;
}

} // namespace

ConductorData conductor_exponents(const BranchSystem& b) {
  const long long N = b.truncation();
  ConductorAttempt now = conductor_at_window(b, N);
  ConductorAttempt prev = conductor_at_window(b, N - 2);
  if (!now.ok || !prev.ok || now.exponents != prev.exponents || now.delta != prev.delta) {
    throw TruncationTooSmall("conductor data did not stabilize at window " + std::to_string(N) +
                             "; raise the truncation");
  }
  ConductorData data;
  data.exponents = now.exponents;
  data.delta = now.delta;
  if (N < 2 * data.max_exponent() + 2) {
    throw TruncationTooSmall("window " + std::to_string(N) +
                             " is below 2*max_conductor + 2; raise the truncation");
  }
  return data;
}

long long PrincipalPartSystem::order_on(size_t branch) const {
  const auto& tail = tails[branch];
  for (size_t idx = 0; idx < tail.size(); ++idx) {
    if (!tail[idx].is_zero()) return static_cast<long long>(tail.size() - idx);
  }
  return 0;
}

Rational PrincipalPartSystem::coeff(size_t branch, long long j) const {
  const auto& tail = tails[branch];
  long long top = static_cast<long long>(tail.size());
  if (j < 1 || j > top) return Rational(0);
  return tail[static_cast<size_t>(top - j)];
}

std::vector<LaurentSeries> PrincipalPartSystem::to_series() const {
  std::vector<LaurentSeries> out;
  for (size_t i = 0; i < tails.size(); ++i) {
    LaurentSeries s;
    for (long long j = 1; j <= static_cast<long long>(tails[i].size()); ++j) {
      s = s + LaurentSeries::term(coeff(i, j), -j);
    }
    out.push_back(s);
  }
  return out;
}

ConstraintSystem descent_constraints(const BranchSystem& b,
                                     const std::vector<long long>& max_orders) {
  if (max_orders.size() != b.num_branches()) {
    throw InvalidInput("one pole bound per branch required");
  }
  const long long N = b.truncation();
  for (long long m : max_orders) {
    if (m < 0) throw InvalidInput("pole bounds must be non-negative");
    if (m > N) throw TruncationTooSmall("pole bound exceeds the truncation window");
  }
  LocalRingModel model = local_ring_model(b);

  std::vector<std::string> names;
  std::vector<std::pair<size_t, long long>> vars; // (branch, order j)
  for (size_t i = 0; i < b.num_branches(); ++i) {
    for (long long j = max_orders[i]; j >= 1; --j) {
      vars.emplace_back(i, j);
      names.push_back("br" + std::to_string(i) + ":t^-" + std::to_string(j));
    }
  }

  RatMatrix rows(0, vars.size());
  std::vector<Rational> row(vars.size(), Rational(0));
  for (size_t r = 0; r < model.basis().rows(); ++r) {
    bool nonzero = false;
    for (size_t v = 0; v < vars.size(); ++v) {
      auto [i, j] = vars[v];
      // Res(f * t^-j dt) on branch i picks the coefficient of t^(j-1) in f.
      row[v] = model.basis().at(r, i * static_cast<size_t>(N) + static_cast<size_t>(j - 1));
      nonzero = nonzero || !row[v].is_zero();
    }
    if (nonzero) rows.append_row(row);
  }
  std::vector<size_t> pivots;
  RatMatrix reduced = rows.rref(&pivots);
  RatMatrix final(pivots.size(), vars.size());
  for (size_t r = 0; r < pivots.size(); ++r) {
    for (size_t c = 0; c < vars.size(); ++c) final.at(r, c) = reduced.at(r, c);
  }
  return ConstraintSystem(std::move(final), std::move(names));
}

bool constraint_count_equals_delta(const BranchSystem& b) {
  ConductorData cond = conductor_exponents(b);
  ConstraintSystem sys = descent_constraints(b, cond.exponents);
  return static_cast<long long>(sys.rank()) == cond.delta;
}

bool conductor_annihilation_check(const BranchSystem& b, const PrincipalPartSystem& eta) {
  ConductorData cond = conductor_exponents(b);
  for (size_t i = 0; i < b.num_branches(); ++i) {
    if (eta.order_on(i) > cond.exponents[i]) return false;
  }
  return true;
}

Rational weighted_residue_check(const BranchSystem& b, const PrincipalPartSystem& eta) {
  ConductorData cond = conductor_exponents(b);
  Rational sum(0);
  for (size_t i = 0; i < b.num_branches(); ++i) {
    sum += Rational(cond.exponents[i]) * eta.residue(i);
  }
  return sum;
}

bool descends(const BranchSystem& b, const PrincipalPartSystem& eta) {
  if (eta.tails.size() != b.num_branches()) {
    throw InvalidInput("one polar tail per branch required");
  }
  const long long N = b.truncation();
  LocalRingModel model = local_ring_model(b);
  for (size_t i = 0; i < b.num_branches(); ++i) {
    if (eta.order_on(i) > N) throw TruncationTooSmall("pole order beyond the window");
  }
  for (size_t r = 0; r < model.basis().rows(); ++r) {
    Rational pairing(0);
    for (size_t i = 0; i < b.num_branches(); ++i) {
      for (long long j = 1; j <= eta.order_on(i); ++j) {
        pairing += eta.coeff(i, j) *
                   model.basis().at(r, i * static_cast<size_t>(N) + static_cast<size_t>(j - 1));
      }
    }
    if (!pairing.is_zero()) return false;
  }
  return true;
}

PrincipalPartSystem dualizing_generator(const BranchSystem& b) {
  ConductorData cond = conductor_exponents(b);
  ConstraintSystem sys = descent_constraints(b, cond.exponents);
  auto kernel = sys.solution_basis();

  // Variable layout: per branch, orders c_i down to 1; the top coefficient
  // of branch i sits at offset_i.
  std::vector<size_t> offsets;
  size_t off = 0;
  for (size_t i = 0; i < b.num_branches(); ++i) {
    offsets.push_back(off);
    off += static_cast<size_t>(cond.exponents[i]);
  }
  const size_t nvars = off;
  const size_t r = b.num_branches();

  // Reorder columns so the top coefficients come first, then row-reduce the
  // kernel; exactly one row may carry a pivot in the top block.
  std::vector<size_t> perm;
  for (size_t i = 0; i < r; ++i) perm.push_back(offsets[i]);
  for (size_t v = 0; v < nvars; ++v) {
    if (std::find(perm.begin(), perm.end(), v) == perm.end()) perm.push_back(v);
  }
  RatMatrix km(kernel.size(), nvars);
  for (size_t row = 0; row < kernel.size(); ++row) {
    for (size_t c = 0; c < nvars; ++c) km.at(row, c) = kernel[row][perm[c]];
  }
  std::vector<size_t> pivots;
  RatMatrix reduced = km.rref(&pivots);
  std::vector<size_t> top_rows;
  for (size_t p = 0; p < pivots.size(); ++p) {
    if (pivots[p] < r) top_rows.push_back(p);
  }
  if (top_rows.size() != 1) {
    throw NotGorensteinDetected("top-order descent space has dimension " +
                                std::to_string(top_rows.size()) + ", expected 1");
  }
  std::vector<Rational> flat(nvars, Rational(0));
  for (size_t c = 0; c < nvars; ++c) flat[perm[c]] = reduced.at(top_rows[0], c);
  for (size_t i = 0; i < r; ++i) {
    if (flat[offsets[i]].is_zero()) {
      throw NotGorensteinDetected("descent space has no element of full pole order on branch " +
                                  std::to_string(i));
    }
  }
  PrincipalPartSystem tau;
  tau.k = 1;
  for (size_t i = 0; i < r; ++i) {
    std::vector<Rational> tail;
    for (long long j = 0; j < cond.exponents[i]; ++j) {
      tail.push_back(flat[offsets[i] + static_cast<size_t>(j)]);
    }
    tau.tails.push_back(std::move(tail));
  }
  return tau;
}

bool descends_k(const BranchSystem& b, const std::vector<LaurentSeries>& eta, int k) {
  if (k < 1) throw InvalidInput("descends_k requires k >= 1");
  if (eta.size() != b.num_branches()) throw InvalidInput("one series per branch required");
  const long long N = b.truncation();
  PrincipalPartSystem tau = dualizing_generator(b);
  std::vector<LaurentSeries> tau_series = tau.to_series();
  LocalRingModel model = local_ring_model(b);

  std::vector<LaurentSeries> h;
  for (size_t i = 0; i < b.num_branches(); ++i) {
    long long c = static_cast<long long>(tau.tails[i].size());
    // Keep enough terms of the divisor that the quotient is known mod t^N.
    long long guard = N + 2 * k * c + 8;
    LaurentSeries tk = tau_series[i].pow(k).truncated(guard);
    LaurentSeries quotient = (eta[i].truncated(guard) * tk.inverted()).truncated(N);
    if (!quotient.is_zero() && quotient.valuation() < 0) return false;
    h.push_back(quotient);
  }
  return model.contains_series(h);
}

LaurentSeries eval_on_branch(const Poly2& p, const LaurentSeries& x, const LaurentSeries& y) {
  LaurentSeries acc;
  for (const auto& [key, c] : p.terms()) {
    LaurentSeries term = x.pow(key.first) * y.pow(key.second);
    acc = acc + term.scaled(c);
  }
  return acc;
}

LaurentSeries pullback_dx_over(const Poly2& g, const BranchSystem& b, size_t branch) {
  const auto& br = b.branches().at(branch);
  LaurentSeries denom = eval_on_branch(g, br.x, br.y).truncated(b.truncation());
  if (denom.is_zero()) {
    throw ZeroDivision("denominator vanishes identically along branch " +
                       std::to_string(branch));
  }
  LaurentSeries dx = br.x.derivative();
  return dx * denom.inverted();
}

LaurentSeries pullback_plane_differential(const Poly2& f, const BranchSystem& b, size_t branch) {
  return pullback_dx_over(f.d_dy(), b, branch);
}

} // namespace residuum
