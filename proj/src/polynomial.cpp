#include "bcr/polynomial.hpp"
#include "bcr/errors.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace bcr {

Laurent::Laurent(long long c) {
  if (c != 0) c_ = {BigInt(c)};
}

Laurent::Laurent(int lo, std::vector<BigInt> coeffs) : lo_(lo), c_(std::move(coeffs)) { trim(); }

Laurent Laurent::monomial(const BigInt& c, int e) { return Laurent(e, {c}); }

Laurent t_pow(int e) { return Laurent::monomial(1, e); }

Laurent Laurent::one_plus_t_minus_one_pow(int k) { return Laurent(1) + (t_pow(1) - Laurent(1)).pow(k); }

void Laurent::trim() {
  std::size_t a = 0;
  while (a < c_.size() && c_[a] == 0) ++a;
  if (a == c_.size()) {
    c_.clear();
    lo_ = 0;
    return;
  }
  std::size_t b = c_.size();
  while (c_[b - 1] == 0) --b;
  c_ = std::vector<BigInt>(c_.begin() + a, c_.begin() + b);
  lo_ += static_cast<int>(a);
}

BigInt Laurent::coeff(int e) const {
  if (is_zero() || e < lo_ || e > hi()) return 0;
  return c_[e - lo_];
}

Laurent Laurent::operator+(const Laurent& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  int lo = std::min(lo_, o.lo_), hi = std::max(this->hi(), o.hi());
  std::vector<BigInt> c(hi - lo + 1, BigInt(0));
  for (std::size_t i = 0; i < c_.size(); ++i) c[lo_ - lo + i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) c[o.lo_ - lo + i] += o.c_[i];
  return Laurent(lo, std::move(c));
}

Laurent Laurent::operator-() const {
  Laurent r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

Laurent Laurent::operator-(const Laurent& o) const { return *this + (-o); }

Laurent Laurent::operator*(const Laurent& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<BigInt> c(c_.size() + o.c_.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
  return Laurent(lo_ + o.lo_, std::move(c));
}

Laurent Laurent::exact_div(const Laurent& o) const {
  if (o.is_zero()) throw std::domain_error("division by zero polynomial");
  if (is_zero()) return {};
  // Long division from the top coefficient.
  std::vector<BigInt> rem = c_;
  std::size_t dn = o.c_.size();
  if (rem.size() < dn) throw std::domain_error("inexact polynomial division");
  std::vector<BigInt> q(rem.size() - dn + 1, BigInt(0));
  const BigInt& lead = o.c_.back();
  for (std::size_t i = q.size(); i-- > 0;) {
    const BigInt& top = rem[i + dn - 1];
    if (top == 0) continue;
    if (top % lead != 0) throw std::domain_error("inexact polynomial division");
    BigInt f = top / lead;
    q[i] = f;
    for (std::size_t j = 0; j < dn; ++j) rem[i + j] -= f * o.c_[j];
  }
  if (std::any_of(rem.begin(), rem.end(), [](const BigInt& x) { return x != 0; }))
    throw std::domain_error("inexact polynomial division");
  return Laurent(lo_ - o.lo_, std::move(q));
}

Laurent Laurent::shift(int m) const {
  Laurent r = *this;
  if (!r.is_zero()) r.lo_ += m;
  return r;
}

Laurent Laurent::pow(int e) const {
  if (e < 0) throw std::domain_error("negative power");
  Laurent r(1), b = *this;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

BigInt Laurent::at_one() const {
  BigInt s = 0;
  for (const auto& x : c_) s += x;
  return s;
}

BigInt Laurent::derivative_at_one() const {
  BigInt s = 0;
  for (std::size_t i = 0; i < c_.size(); ++i) s += c_[i] * (lo_ + static_cast<int>(i));
  return s;
}

std::string Laurent::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    BigInt c = c_[i];
    if (c == 0) continue;
    int e = lo_ + static_cast<int>(i);
    if (c < 0) os << (first ? "-" : " - ");
    else if (!first) os << " + ";
    BigInt a = abs(c);
    if (e == 0 || a != 1) os << a;
    if (e != 0) {
      if (a != 1) os << '*';
      os << 't';
      if (e != 1) os << '^' << e;
    }
    first = false;
  }
  return os.str();
}

TruncatedSeries::TruncatedSeries(int order) : n_(order), c_(order + 1, Rational(0)) {
  if (order < 0) throw ValidationError("series order must be nonnegative");
}

TruncatedSeries::TruncatedSeries(int order, std::vector<Rational> coeffs) : TruncatedSeries(order) {
  for (std::size_t i = 0; i < coeffs.size() && i <= static_cast<std::size_t>(order); ++i) c_[i] = coeffs[i];
}

TruncatedSeries TruncatedSeries::constant(int order, const Rational& c) {
  TruncatedSeries s(order);
  s.c_[0] = c;
  return s;
}

TruncatedSeries TruncatedSeries::h(int order) {
  TruncatedSeries s(order);
  if (order >= 1) s.c_[1] = 1;
  return s;
}

TruncatedSeries TruncatedSeries::exp_linear(int order, const Rational& a) {
  TruncatedSeries s(order);
  Rational term = 1;
  for (int i = 0; i <= order; ++i) {
    s.c_[i] = term;
    term = term * a / (i + 1);
  }
  return s;
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
  TruncatedSeries r(std::min(n_, o.n_));
  for (int i = 0; i <= r.n_; ++i) r.c_[i] = c_[i] + o.c_[i];
  return r;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& o) const { return *this + o * Rational(-1); }

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
  TruncatedSeries r(std::min(n_, o.n_));
  for (int i = 0; i <= r.n_; ++i) {
    if (c_[i] == 0) continue;
    for (int j = 0; i + j <= r.n_; ++j) r.c_[i + j] += c_[i] * o.c_[j];
  }
  return r;
}

TruncatedSeries TruncatedSeries::operator*(const Rational& s) const {
  TruncatedSeries r = *this;
  for (auto& x : r.c_) x *= s;
  return r;
}

void TruncatedSeries::check_nilpotent(const char* op) const {
  if (c_[0] != 0) throw std::domain_error(std::string(op) + " needs a series without constant term");
}

TruncatedSeries TruncatedSeries::log1p() const {
  check_nilpotent("log1p");
  TruncatedSeries r(n_), p = constant(n_, 1);
  for (int j = 1; j <= n_; ++j) {
    p = p * *this;
    r = r + p * Rational(j % 2 ? 1 : -1, j);
  }
  return r;
}

TruncatedSeries TruncatedSeries::exp() const {
  check_nilpotent("exp");
  TruncatedSeries r = constant(n_, 1), p = constant(n_, 1);
  for (int j = 1; j <= n_; ++j) {
    p = p * *this * Rational(1, j);
    r = r + p;
  }
  return r;
}

TruncatedSeries TruncatedSeries::compose(const TruncatedSeries& g) const {
  g.check_nilpotent("compose");
  int n = std::min(n_, g.n_);
  TruncatedSeries r(n), p = constant(n, 1);
  for (int j = 0; j <= n; ++j) {
    r = r + p * c_[j];
    p = p * g;
  }
  return r;
}

TruncatedSeries substitute_exp(const Laurent& p, int order) {
  TruncatedSeries r(order);
  for (int e = p.lo(); !p.is_zero() && e <= p.hi(); ++e) {
    BigInt c = p.coeff(e);
    if (c != 0) r = r + TruncatedSeries::exp_linear(order, e) * Rational(c);
  }
  return r;
}

}  // namespace bcr
