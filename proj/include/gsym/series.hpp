#pragma once

#include <vector>

#include "gsym/types.hpp"

namespace gsym {

/// Truncated power series c_0 + c_1 z + ... + c_R z^R with exact rational
/// coefficients; every operation keeps the truncation order of its inputs.
class PowerSeries {
 public:
  explicit PowerSeries(int order = 0) : c_(order + 1, Rational(0)) {}
  PowerSeries(std::vector<Rational> coeffs, int order);

  static PowerSeries constant(const Rational& v, int order);
  /// z^k truncated at `order`.
  static PowerSeries monomial(int k, const Rational& v, int order);

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const Rational& operator[](int i) const { return c_[i]; }
  Rational& operator[](int i) { return c_[i]; }
  const std::vector<Rational>& coeffs() const { return c_; }

  friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator*(const Rational& s, const PowerSeries& a);
  friend PowerSeries operator/(const PowerSeries& a, const PowerSeries& b);
  friend bool operator==(const PowerSeries& a, const PowerSeries& b) { return a.c_ == b.c_; }

  /// Multiplicative inverse; requires a nonzero constant term.
  PowerSeries inverse() const;
  /// f(g) for g with zero constant term.
  PowerSeries compose(const PowerSeries& g) const;
  PowerSeries truncated(int order) const;
  bool all_integers() const;

 private:
  std::vector<Rational> c_;
};

}  // namespace gsym
