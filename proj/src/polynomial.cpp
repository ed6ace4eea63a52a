#include "residuum/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace residuum {

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Polynomial Polynomial::constant(const Rational& c) {
  Polynomial p;
  if (!c.is_zero()) p.coeffs_ = {c};
  return p;
}

Polynomial Polynomial::monomial(const Rational& c, int degree) {
  Polynomial p;
  if (!c.is_zero()) {
    p.coeffs_.assign(static_cast<size_t>(degree) + 1, Rational(0));
    p.coeffs_.back() = c;
  }
  return p;
}

Rational Polynomial::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Rational(0);
  return coeffs_[static_cast<size_t>(i)];
}

const Rational& Polynomial::leading() const {
  static const Rational zero(0);
  return coeffs_.empty() ? zero : coeffs_.back();
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  Polynomial r;
  r.coeffs_.resize(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
  for (size_t i = 0; i < r.coeffs_.size(); ++i) {
    r.coeffs_[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
  }
  r.trim();
  return r;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial r;
  if (a.is_zero() || b.is_zero()) return r;
  r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (size_t j = 0; j < b.coeffs_.size(); ++j) {
      r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  r.trim();
  return r;
}

Polynomial Polynomial::scaled(const Rational& c) const {
  if (c.is_zero()) return Polynomial();
  Polynomial r = *this;
  for (auto& x : r.coeffs_) x *= c;
  return r;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw ZeroDivision("polynomial division by zero");
  Polynomial q;
  Polynomial r = a;
  if (a.degree() >= b.degree()) {
    q.coeffs_.assign(static_cast<size_t>(a.degree() - b.degree()) + 1, Rational(0));
  }
  while (!r.is_zero() && r.degree() >= b.degree()) {
    int shift = r.degree() - b.degree();
    Rational factor = r.leading() / b.leading();
    q.coeffs_[static_cast<size_t>(shift)] += factor;
    // r -= factor * z^shift * b
    for (int i = 0; i <= b.degree(); ++i) {
      r.coeffs_[static_cast<size_t>(i + shift)] -= factor * b.coeffs_[static_cast<size_t>(i)];
    }
    r.trim();
  }
  q.trim();
  return {q, r};
}

Polynomial Polynomial::gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Polynomial Polynomial::derivative() const {
  Polynomial r;
  if (degree() < 1) return r;
  r.coeffs_.resize(coeffs_.size() - 1);
  for (size_t i = 1; i < coeffs_.size(); ++i) {
    r.coeffs_[i - 1] = coeffs_[i] * Rational(static_cast<long long>(i));
  }
  r.trim();
  return r;
}

Rational Polynomial::eval(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::shifted(const Rational& c) const {
  // Horner-style synthetic shift: p(z + c).
  Polynomial acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * Polynomial({c, Rational(1)}) + Polynomial::constant(*it);
  }
  return acc;
}

Polynomial Polynomial::reversed() const {
  Polynomial r = *this;
  std::reverse(r.coeffs_.begin(), r.coeffs_.end());
  r.trim();
  return r;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(leading().inverse());
}

int Polynomial::root_multiplicity(const Rational& x) const {
  if (is_zero()) return 0;
  Polynomial p = *this;
  int m = 0;
  while (!p.is_zero() && p.eval(x).is_zero()) {
    p = divmod(p, Polynomial({-x, Rational(1)})).first;
    ++m;
  }
  return m;
}

int Polynomial::remove_root(const Rational& x) {
  int m = 0;
  while (!is_zero() && eval(x).is_zero()) {
    *this = divmod(*this, Polynomial({-x, Rational(1)})).first;
    ++m;
  }
  return m;
}

namespace {

std::vector<BigInt> positive_divisors(BigInt n) {
  if (n < 0) n = -n;
  std::vector<BigInt> divs;
  for (BigInt d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      divs.push_back(d);
      if (d * d != n) divs.push_back(n / d);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

} // namespace

std::map<Rational, int> Polynomial::rational_roots(bool require_split) const {
  std::map<Rational, int> roots;
  if (is_zero()) return roots;
  Polynomial p = *this;

  int m0 = p.remove_root(Rational(0));
  if (m0 > 0) roots[Rational(0)] = m0;
  if (p.degree() < 1) return roots;

  // Clear denominators to a primitive integer polynomial.
  BigInt lcm(1);
  for (const auto& c : p.coeffs()) lcm = boost::multiprecision::lcm(lcm, c.den());
  std::vector<BigInt> ic;
  ic.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) ic.push_back(c.num() * (lcm / c.den()));

  const auto ps = positive_divisors(ic.front());
  const auto qs = positive_divisors(ic.back());
  for (const auto& pn : ps) {
    for (const auto& qd : qs) {
      for (int s : {1, -1}) {
        Rational cand(s > 0 ? pn : BigInt(-pn), qd);
        int m = p.remove_root(cand);
        if (m > 0) {
          roots[cand] += m;
          if (p.degree() < 1) return roots;
        }
      }
    }
  }
  if (require_split && p.degree() >= 1) {
    throw InvalidInput("polynomial has non-rational roots; only differentials with "
                       "rational pole locations are supported: " + str());
  }
  return roots;
}

std::string Polynomial::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    Rational c = coeff(i);
    if (c.is_zero()) continue;
    if (first) {
      if (c.sign() < 0) os << "-";
      first = false;
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    Rational a = c.abs();
    if (i == 0) {
      os << a.str();
    } else {
      if (!(a == Rational(1))) os << a.str() << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw ZeroDivision("rational function with zero denominator");
  normalize();
}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = Polynomial::constant(Rational(1));
    return;
  }
  Polynomial g = Polynomial::gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = Polynomial::divmod(num_, g).first;
    den_ = Polynomial::divmod(den_, g).first;
  }
  Rational lead = den_.leading();
  if (!(lead == Rational(1))) {
    den_ = den_.scaled(lead.inverse());
    num_ = num_.scaled(lead.inverse());
  }
}

RationalFunction RationalFunction::constant(const Rational& c) {
  return RationalFunction(Polynomial::constant(c), Polynomial::constant(Rational(1)));
}

RationalFunction RationalFunction::pole_term(const Rational& c, const Rational& p, int order) {
  Polynomial lin({-p, Rational(1)});
  Polynomial den = Polynomial::constant(Rational(1));
  for (int i = 0; i < order; ++i) den = den * lin;
  return RationalFunction(Polynomial::constant(c), den);
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
  return a + (-b);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) throw ZeroDivision("rational function division by zero");
  return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

RationalFunction RationalFunction::scaled(const Rational& c) const {
  return RationalFunction(num_.scaled(c), den_);
}

RationalFunction RationalFunction::derivative() const {
  return RationalFunction(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

Rational RationalFunction::eval(const Rational& x) const {
  Rational d = den_.eval(x);
  if (d.is_zero()) throw ZeroDivision("evaluating rational function at a pole");
  return num_.eval(x) / d;
}

RationalFunction RationalFunction::compose_reciprocal() const {
  // f(1/z) = z^(deg den - deg num) * rev(num)(z) / rev(den)(z), written with
  // the power folded into whichever side keeps both parts polynomial.
  if (num_.is_zero()) return RationalFunction();
  int dn = num_.degree();
  int dd = den_.degree();
  Polynomial rn = num_.reversed();
  Polynomial rd = den_.reversed();
  int shift = dd - dn;
  if (shift >= 0) {
    return RationalFunction(rn * Polynomial::monomial(Rational(1), shift), rd);
  }
  return RationalFunction(rn, rd * Polynomial::monomial(Rational(1), -shift));
}

int RationalFunction::pole_order_at(const Rational& p) const {
  return den_.root_multiplicity(p);
}

std::map<Rational, int> RationalFunction::finite_poles() const {
  if (num_.is_zero()) return {};
  return den_.rational_roots(/*require_split=*/true);
}

std::string RationalFunction::str(const std::string& var) const {
  if (num_.is_zero()) return "0";
  if (den_.degree() == 0) return num_.str(var);
  return "(" + num_.str(var) + ") / (" + den_.str(var) + ")";
}

void Poly2::add_term(int dx, int dy, const Rational& c) {
  if (c.is_zero()) return;
  auto key = std::make_pair(dx, dy);
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Poly2 Poly2::d_dx() const {
  Poly2 r;
  for (const auto& [k, c] : terms_) {
    if (k.first > 0) r.add_term(k.first - 1, k.second, c * Rational(k.first));
  }
  return r;
}

Poly2 Poly2::d_dy() const {
  Poly2 r;
  for (const auto& [k, c] : terms_) {
    if (k.second > 0) r.add_term(k.first, k.second - 1, c * Rational(k.second));
  }
  return r;
}

std::string Poly2::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) os << (c.sign() < 0 ? " - " : " + ");
    else if (c.sign() < 0) os << "-";
    first = false;
    Rational a = c.abs();
    bool has_var = k.first > 0 || k.second > 0;
    if (!has_var || !(a == Rational(1))) os << a.str();
    if (k.first > 0) {
      os << "x";
      if (k.first > 1) os << "^" << k.first;
    }
    if (k.second > 0) {
      os << "y";
      if (k.second > 1) os << "^" << k.second;
    }
  }
  return os.str();
}

} // namespace residuum
