#pragma once

#include <map>
#include <string>
#include <vector>

#include "gsym/types.hpp"

namespace gsym {

/// Dense univariate polynomial, coefficients in ascending degree order.
template <typename Scalar>
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }
  static Polynomial constant(const Scalar& v) { return Polynomial(std::vector<Scalar>{v}); }
  static Polynomial x() { return Polynomial(std::vector<Scalar>{Scalar(0), Scalar(1)}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Scalar coeff(int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : Scalar(0); }
  const std::vector<Scalar>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }

  template <typename T>
  T operator()(const T& x) const {
    T r(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + T(*it);
    return r;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Scalar> r(std::max(a.c_.size(), b.c_.size()), Scalar(0));
    for (size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
    return Polynomial(std::move(r));
  }
  friend Polynomial operator-(const Polynomial& a) {
    std::vector<Scalar> r = a.c_;
    for (auto& v : r) v = -v;
    return Polynomial(std::move(r));
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Scalar> r(a.c_.size() + b.c_.size() - 1, Scalar(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
      for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(r));
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  /// Human-readable form in the variable `var`, highest degree first.
  std::string to_string(const std::string& var = "x") const {
    if (c_.empty()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
      if (c_[i] == 0) continue;
      Scalar v = c_[i];
      bool neg = v < 0;
      if (neg) v = -v;
      if (!out.empty()) out += neg ? " - " : " + ";
      else if (neg) out += "-";
      bool unit = v == 1;
      if (!unit || i == 0) out += v.str();
      if (i > 0) out += var + (i > 1 ? "^" + std::to_string(i) : "");
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Scalar> c_;
};

/// Laurent polynomial with rational coefficients in a formal variable s.
/// Used with s = q^{1/2}: the key is the power of q^{1/2}.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(int c) { if (c != 0) t_[0] = Rational(c); }
  LaurentPoly(const Rational& c) { if (c != 0) t_[0] = c; }
  static LaurentPoly monomial(int power, const Rational& c = 1);

  const std::map<int, Rational>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  Rational coeff(int power) const;
  int min_power() const;
  int max_power() const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator-(const LaurentPoly& a) { return LaurentPoly() - a; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.t_ == b.t_; }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  LaurentPoly pow(int e) const;
  /// Exact division; throws ContractError when `d` does not divide this.
  LaurentPoly divided_by(const LaurentPoly& d) const;
  /// Substitutes s -> s^{-1}.
  LaurentPoly bar() const;
  double eval(double s) const;

  /// Renders with q^{k/2} monomials, e.g. "q + q^3 - q^4".
  std::string to_q_string() const;

 private:
  std::map<int, Rational> t_;
};

/// Conjugation hook for coefficient rings (identity on real rings).
inline Rational conj_coeff(const Rational& r) { return r; }
inline LaurentPoly conj_coeff(const LaurentPoly& p) { return p; }
inline bool is_zero_coeff(const Rational& r) { return r == 0; }
inline bool is_zero_coeff(const LaurentPoly& p) { return p.is_zero(); }

}  // namespace gsym
