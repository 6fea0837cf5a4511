#pragma once

#include "bcr/exact.hpp"

#include <string>
#include <vector>

namespace bcr {

// Element of Z[t, t^-1]: coeffs[i] is the coefficient of t^(lo + i). Always trimmed.
class Laurent {
 public:
  Laurent() = default;
  Laurent(long long c);  // NOLINT: constants convert implicitly
  Laurent(int lo, std::vector<BigInt> coeffs);
  static Laurent monomial(const BigInt& c, int e);
  // 1 + (t-1)^k
  static Laurent one_plus_t_minus_one_pow(int k);

  int lo() const { return lo_; }
  int hi() const { return lo_ + static_cast<int>(c_.size()) - 1; }
  const std::vector<BigInt>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  BigInt coeff(int e) const;

  Laurent operator+(const Laurent& o) const;
  Laurent operator-(const Laurent& o) const;
  Laurent operator-() const;
  Laurent operator*(const Laurent& o) const;
  Laurent& operator+=(const Laurent& o) { return *this = *this + o; }
  Laurent& operator-=(const Laurent& o) { return *this = *this - o; }
  Laurent& operator*=(const Laurent& o) { return *this = *this * o; }
  bool operator==(const Laurent& o) const { return lo_ == o.lo_ && c_ == o.c_; }

  // Exact quotient; throws if o does not divide *this.
  Laurent exact_div(const Laurent& o) const;
  Laurent shift(int m) const;
  Laurent pow(int e) const;

  BigInt at_one() const;
  BigInt derivative_at_one() const;
  std::string str() const;

 private:
  void trim();
  int lo_ = 0;
  std::vector<BigInt> c_;
};

Laurent t_pow(int e);

// Coefficients of h^0 .. h^N over Q.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(int order);
  TruncatedSeries(int order, std::vector<Rational> coeffs);
  static TruncatedSeries constant(int order, const Rational& c);
  static TruncatedSeries h(int order);
  // exp(a h)
  static TruncatedSeries exp_linear(int order, const Rational& a);

  int order() const { return n_; }
  const Rational& operator[](int i) const { return c_[i]; }
  Rational& operator[](int i) { return c_[i]; }
  const std::vector<Rational>& coeffs() const { return c_; }

  TruncatedSeries operator+(const TruncatedSeries& o) const;
  TruncatedSeries operator-(const TruncatedSeries& o) const;
  TruncatedSeries operator*(const TruncatedSeries& o) const;
  TruncatedSeries operator*(const Rational& s) const;
  bool operator==(const TruncatedSeries&) const = default;

  // Require zero constant term.
  TruncatedSeries log1p() const;
  TruncatedSeries exp() const;
  // f(g(h)) with g(0) = 0.
  TruncatedSeries compose(const TruncatedSeries& g) const;

 private:
  void check_nilpotent(const char* op) const;
  int n_;
  std::vector<Rational> c_;
};

// L(e^h) as a series.
TruncatedSeries substitute_exp(const Laurent& p, int order);

}  // namespace bcr
