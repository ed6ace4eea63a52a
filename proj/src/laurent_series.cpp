#include "residuum/laurent_series.hpp"

#include <algorithm>
#include <sstream>

#include "residuum/errors.hpp"

namespace residuum {

LaurentSeries::LaurentSeries(long long valuation, std::vector<Rational> coeffs, long long trunc)
    : valuation_(valuation), coeffs_(std::move(coeffs)), trunc_(trunc) {
  // Stored coefficients at or beyond the truncation are meaningless; drop them.
  if (static_cast<long long>(coeffs_.size()) > trunc_ - valuation_) {
    coeffs_.resize(static_cast<size_t>(std::max<long long>(0, trunc_ - valuation_)));
  }
  normalize();
}

LaurentSeries LaurentSeries::term(const Rational& c, long long exponent) {
  if (c.is_zero()) return LaurentSeries();
  return LaurentSeries(exponent, {c});
}

void LaurentSeries::normalize() {
  size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead].is_zero()) ++lead;
  if (lead > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lead));
    valuation_ += static_cast<long long>(lead);
  }
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  if (coeffs_.empty()) valuation_ = trunc_;
  if (valuation_ > trunc_) throw Error(Error::Kind::internal, "series valuation beyond truncation");
}

Rational LaurentSeries::coeff(long long n) const {
  if (n >= trunc_) {
    throw QueryBeyondTruncation("coefficient of t^" + std::to_string(n) +
                                " requested but series is only known up to O(t^" +
                                std::to_string(trunc_) + ")");
  }
  return coeff_or_zero(n);
}

Rational LaurentSeries::coeff_or_zero(long long n) const {
  if (n < valuation_ || n >= valuation_ + static_cast<long long>(coeffs_.size())) {
    return Rational(0);
  }
  return coeffs_[static_cast<size_t>(n - valuation_)];
}

LaurentSeries LaurentSeries::operator-() const {
  LaurentSeries r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
  long long trunc = std::min(a.trunc_, b.trunc_);
  if (a.is_zero() && b.is_zero()) return LaurentSeries::zero(trunc);
  long long lo = std::min(a.is_zero() ? b.valuation_ : a.valuation_,
                          b.is_zero() ? a.valuation_ : b.valuation_);
  lo = std::min(lo, trunc);
  // All coefficients past both stored tops are known to be zero; do not
  // materialize the window up to the truncation sentinel.
  long long top_a = a.is_zero() ? lo : a.valuation_ + static_cast<long long>(a.coeffs_.size());
  long long top_b = b.is_zero() ? lo : b.valuation_ + static_cast<long long>(b.coeffs_.size());
  long long hi = std::min(trunc, std::max(top_a, top_b));
  hi = std::max(hi, lo);
  std::vector<Rational> coeffs(static_cast<size_t>(hi - lo), Rational(0));
  for (long long n = lo; n < hi; ++n) {
    coeffs[static_cast<size_t>(n - lo)] = a.coeff_or_zero(n) + b.coeff_or_zero(n);
  }
  return LaurentSeries(lo, std::move(coeffs), trunc);
}

LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) { return a + (-b); }

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
  // Joint truncation: unknown tails enter the product at a.val + b.trunc and
  // b.val + a.trunc.
  long long trunc = std::min({a.valuation_ + b.trunc_, b.valuation_ + a.trunc_,
                              LaurentSeries::kExactOrder});
  if (a.is_zero() || b.is_zero()) return LaurentSeries::zero(trunc);
  long long lo = a.valuation_ + b.valuation_;
  if (lo >= trunc) return LaurentSeries::zero(trunc);
  long long top = lo + static_cast<long long>(a.coeffs_.size() + b.coeffs_.size()) - 1;
  long long hi = std::min(trunc, top);
  std::vector<Rational> coeffs(static_cast<size_t>(hi - lo), Rational(0));
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    long long na = a.valuation_ + static_cast<long long>(i);
    for (size_t j = 0; j < b.coeffs_.size(); ++j) {
      long long n = na + b.valuation_ + static_cast<long long>(j);
      if (n >= hi) break;
      coeffs[static_cast<size_t>(n - lo)] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return LaurentSeries(lo, std::move(coeffs), trunc);
}

LaurentSeries LaurentSeries::scaled(const Rational& c) const {
  if (c.is_zero()) return LaurentSeries::zero(trunc_);
  LaurentSeries r = *this;
  for (auto& x : r.coeffs_) x *= c;
  return r;
}

LaurentSeries LaurentSeries::compose_power(long long e) const {
  if (e < 1) throw InvalidInput("compose_power requires a positive exponent");
  long long trunc = is_exact() ? kExactOrder : trunc_ * e;
  if (is_zero()) return LaurentSeries::zero(trunc);
  std::vector<Rational> coeffs(static_cast<size_t>((coeffs_.size() - 1) * e + 1), Rational(0));
  for (size_t j = 0; j < coeffs_.size(); ++j) coeffs[j * static_cast<size_t>(e)] = coeffs_[j];
  return LaurentSeries(valuation_ * e, std::move(coeffs), trunc);
}

LaurentSeries LaurentSeries::inverted() const {
  if (is_zero()) throw ZeroDivision("inverting a series that is zero up to truncation");
  long long v = valuation_;
  if (is_exact() && coeffs_.size() == 1) {
    return LaurentSeries::term(coeffs_.front().inverse(), -v);
  }
  // Write the series as c * t^v * (1 + w) and invert the unit part. Inverting
  // an exact multi-term series produces an infinite series; a default window
  // of 32 unit terms is kept in that case (callers wanting more truncate the
  // input to the precision they need).
  constexpr long long kExactInverseTerms = 32;
  long long terms = is_exact() ? kExactInverseTerms : trunc_ - v;
  long long out_trunc = terms - v;
  const Rational& lead = coeffs_.front();
  Rational lead_inv = lead.inverse();
  // Inverse coefficients b of the unit u (u0 = 1): b0 = 1, b_n = -sum_{k=1}^n u_k b_{n-k}.
  std::vector<Rational> u(static_cast<size_t>(terms), Rational(0));
  for (size_t j = 0; j < coeffs_.size() && static_cast<long long>(j) < terms; ++j) {
    u[j] = coeffs_[j] * lead_inv;
  }
  std::vector<Rational> b(static_cast<size_t>(terms), Rational(0));
  b[0] = Rational(1);
  for (long long n = 1; n < terms; ++n) {
    Rational s(0);
    for (long long k = 1; k <= n; ++k) {
      if (!u[static_cast<size_t>(k)].is_zero() && !b[static_cast<size_t>(n - k)].is_zero()) {
        s += u[static_cast<size_t>(k)] * b[static_cast<size_t>(n - k)];
      }
    }
    b[static_cast<size_t>(n)] = -s;
  }
  for (auto& c : b) c *= lead_inv;
  return LaurentSeries(-v, std::move(b), out_trunc);
}

LaurentSeries LaurentSeries::pow(long long e) const {
  if (e < 0) throw InvalidInput("pow requires a non-negative exponent");
  LaurentSeries acc = LaurentSeries::one();
  for (long long i = 0; i < e; ++i) acc = acc * *this;
  return acc;
}

LaurentSeries LaurentSeries::derivative() const {
  long long trunc = is_exact() ? kExactOrder : trunc_ - 1;
  if (is_zero()) return LaurentSeries::zero(trunc);
  std::vector<Rational> coeffs(coeffs_.size(), Rational(0));
  for (size_t j = 0; j < coeffs_.size(); ++j) {
    coeffs[j] = coeffs_[j] * Rational(valuation_ + static_cast<long long>(j));
  }
  return LaurentSeries(valuation_ - 1, std::move(coeffs), trunc);
}

LaurentSeries LaurentSeries::truncated(long long new_trunc) const {
  if (new_trunc >= trunc_) return *this;
  return LaurentSeries(valuation_, coeffs_, new_trunc);
}

std::vector<long long> LaurentSeries::support() const {
  std::vector<long long> s;
  for (size_t j = 0; j < coeffs_.size(); ++j) {
    if (!coeffs_[j].is_zero()) s.push_back(valuation_ + static_cast<long long>(j));
  }
  return s;
}

bool LaurentSeries::agree(const LaurentSeries& a, const LaurentSeries& b) {
  long long hi = std::min(a.trunc_, b.trunc_);
  long long lo = std::min(a.is_zero() ? hi : a.valuation_, b.is_zero() ? hi : b.valuation_);
  for (long long n = lo; n < hi; ++n) {
    if (!(a.coeff_or_zero(n) == b.coeff_or_zero(n))) return false;
  }
  return true;
}

std::string LaurentSeries::str(const std::string& var) const {
  std::ostringstream os;
  bool first = true;
  for (size_t j = 0; j < coeffs_.size(); ++j) {
    const Rational& c = coeffs_[j];
    if (c.is_zero()) continue;
    long long n = valuation_ + static_cast<long long>(j);
    if (first) {
      if (c.sign() < 0) os << "-";
      first = false;
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    Rational a = c.abs();
    if (n == 0) {
      os << a.str();
    } else {
      if (!(a == Rational(1))) os << a.str() << "*";
      if (n > 0) {
        os << var;
        if (n > 1) os << "^" << n;
      } else {
        os << var << "^(" << n << ")";
      }
    }
  }
  if (first) os << "0";
  if (!is_exact()) os << " + O(" << var << "^" << trunc_ << ")";
  return os.str();
}

LaurentSeries series_expand(const RationalFunction& f, const Rational& center, long long trunc) {
  if (f.is_zero()) return LaurentSeries::zero(trunc);
  // Shift both parts so the expansion point becomes u = 0, split off powers
  // of u, and divide the remaining unit power series.
  Polynomial p = f.num().shifted(center);
  Polynomial q = f.den().shifted(center);
  int vp = 0;
  while (p.coeff(vp).is_zero()) ++vp;
  int vq = 0;
  while (q.coeff(vq).is_zero()) ++vq;

  std::vector<Rational> pc(p.coeffs().begin() + vp, p.coeffs().end());
  std::vector<Rational> qc(q.coeffs().begin() + vq, q.coeffs().end());
  long long val = vp - vq;
  long long unit_terms = trunc - val;
  if (unit_terms <= 0) return LaurentSeries::zero(trunc);

  LaurentSeries punit(0, std::move(pc));
  LaurentSeries qunit(0, std::move(qc), unit_terms);
  LaurentSeries ratio = punit * qunit.inverted();
  std::vector<Rational> out(static_cast<size_t>(unit_terms), Rational(0));
  for (long long n = 0; n < unit_terms; ++n) out[static_cast<size_t>(n)] = ratio.coeff_or_zero(n);
  return LaurentSeries(val, std::move(out), trunc);
}

long long default_truncation(long long max_conductor, long long k, long long max_pole_order) {
  return 2 * max_conductor + k * max_pole_order + 4;
}

} // namespace residuum
