#include "gsym/series.hpp"

#include <algorithm>

namespace gsym {

PowerSeries::PowerSeries(std::vector<Rational> coeffs, int order) : c_(order + 1, Rational(0)) {
  for (int i = 0; i <= order && i < static_cast<int>(coeffs.size()); ++i) c_[i] = coeffs[i];
}

PowerSeries PowerSeries::constant(const Rational& v, int order) { return monomial(0, v, order); }

PowerSeries PowerSeries::monomial(int k, const Rational& v, int order) {
  PowerSeries s(order);
  if (k <= order) s.c_[k] = v;
  return s;
}

static int common_order(const PowerSeries& a, const PowerSeries& b) { return std::min(a.order(), b.order()); }

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
  PowerSeries r(common_order(a, b));
  for (int i = 0; i <= r.order(); ++i) r[i] = a[i] + b[i];
  return r;
}

PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
  PowerSeries r(common_order(a, b));
  for (int i = 0; i <= r.order(); ++i) r[i] = a[i] - b[i];
  return r;
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
  PowerSeries r(common_order(a, b));
  for (int i = 0; i <= r.order(); ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; i + j <= r.order(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

PowerSeries operator*(const Rational& s, const PowerSeries& a) {
  PowerSeries r = a;
  for (int i = 0; i <= r.order(); ++i) r[i] *= s;
  return r;
}

PowerSeries operator/(const PowerSeries& a, const PowerSeries& b) { return a * b.inverse(); }

PowerSeries PowerSeries::inverse() const {
  if (c_[0] == 0) throw ContractError("power series with zero constant term is not invertible");
  PowerSeries r(order());
  r[0] = Rational(1) / c_[0];
  for (int n = 1; n <= order(); ++n) {
    Rational acc = 0;
    for (int k = 1; k <= n; ++k) acc += c_[k] * r[n - k];
    r[n] = -acc / c_[0];
  }
  return r;
}

PowerSeries PowerSeries::compose(const PowerSeries& g) const {
  if (g[0] != 0) throw ContractError("composition needs an inner series without constant term");
  const int R = common_order(*this, g);
  // Horner in g
  PowerSeries r(R);
  for (int k = R; k >= 0; --k) {
    r = r * g.truncated(R);
    r[0] += c_[k];
  }
  return r;
}

PowerSeries PowerSeries::truncated(int order) const {
  PowerSeries r(order);
  for (int i = 0; i <= order && i <= this->order(); ++i) r[i] = c_[i];
  return r;
}

bool PowerSeries::all_integers() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& v) { return mp::denominator(v) == 1; });
}

}  // namespace gsym
