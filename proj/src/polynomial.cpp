#include "gsym/polynomial.hpp"
#include "gsym/exact.hpp"

#include <cmath>

namespace gsym {

LaurentPoly LaurentPoly::monomial(int power, const Rational& c) {
  LaurentPoly p;
  if (c != 0) p.t_[power] = c;
  return p;
}

Rational LaurentPoly::coeff(int power) const {
  auto it = t_.find(power);
  return it == t_.end() ? Rational(0) : it->second;
}

int LaurentPoly::min_power() const { return t_.empty() ? 0 : t_.begin()->first; }
int LaurentPoly::max_power() const { return t_.empty() ? 0 : t_.rbegin()->first; }

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [k, v] : o.t_) {
    Rational& slot = t_[k];
    slot += v;
    if (slot == 0) t_.erase(k);
  }
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [k, v] : o.t_) {
    Rational& slot = t_[k];
    slot -= v;
    if (slot == 0) t_.erase(k);
  }
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  for (const auto& [i, x] : a.t_)
    for (const auto& [j, y] : b.t_) r.t_[i + j] += x * y;
  for (auto it = r.t_.begin(); it != r.t_.end();) it = it->second == 0 ? r.t_.erase(it) : std::next(it);
  return r;
}

LaurentPoly LaurentPoly::pow(int e) const {
  if (e < 0) {
    if (t_.size() != 1) throw ContractError("negative power of a non-monomial Laurent polynomial");
    auto [k, v] = *t_.begin();
    return monomial(k * e, rpow(v, e));
  }
  LaurentPoly r(1), b = *this;
  while (e > 0) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

LaurentPoly LaurentPoly::divided_by(const LaurentPoly& d) const {
  if (d.is_zero()) throw ContractError("division by the zero Laurent polynomial");
  LaurentPoly rem = *this, quot;
  const int dlead = d.max_power();
  const Rational dc = d.coeff(dlead);
  const int span = d.max_power() - d.min_power();
  while (!rem.is_zero() && rem.max_power() - rem.min_power() >= span) {
    int k = rem.max_power() - dlead;
    Rational c = rem.coeff(rem.max_power()) / dc;
    LaurentPoly m = monomial(k, c);
    quot += m;
    rem -= m * d;
  }
  if (!rem.is_zero()) throw ContractError("Laurent polynomial division is not exact");
  return quot;
}

LaurentPoly LaurentPoly::bar() const {
  LaurentPoly r;
  for (const auto& [k, v] : t_) r.t_[-k] = v;
  return r;
}

double LaurentPoly::eval(double s) const {
  double r = 0;
  for (const auto& [k, v] : t_) r += static_cast<double>(v) * std::pow(s, k);
  return r;
}

std::string LaurentPoly::to_q_string() const {
  if (t_.empty()) return "0";
  std::string out;
  for (auto it = t_.begin(); it != t_.end(); ++it) {
    auto [k, v] = *it;
    bool neg = v < 0;
    Rational a = neg ? Rational(-v) : v;
    if (!out.empty()) out += neg ? " - " : " + ";
    else if (neg) out += "-";
    std::string mono;
    if (k != 0) {
      std::string e = k % 2 == 0 ? std::to_string(k / 2) : std::to_string(k) + "/2";
      mono = (k == 2) ? "q" : "q^" + (e.find('/') != std::string::npos || k < 0 ? "{" + e + "}" : e);
    }
    if (a != 1 || mono.empty()) out += a.str();
    out += mono;
  }
  return out;
}

}  // namespace gsym
