#include "gsym/exact.hpp"

#include <numeric>

namespace gsym {

MatrixXq inverse_exact(const MatrixXq& m) {
  if (m.rows() != m.cols()) throw ContractError("inverse of a non-square matrix");
  const Eigen::Index n = m.rows();
  MatrixXq a = m;
  MatrixXq inv = MatrixXq::Identity(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index p = k;
    while (p < n && a(p, k) == 0) ++p;
    if (p == n) throw ContractError("matrix is singular");
    a.row(k).swap(a.row(p));
    inv.row(k).swap(inv.row(p));
    Rational piv = a(k, k);
    for (Eigen::Index j = 0; j < n; ++j) {
      a(k, j) /= piv;
      inv(k, j) /= piv;
    }
    for (Eigen::Index i = 0; i < n; ++i) {
      if (i == k || a(i, k) == 0) continue;
      Rational f = a(i, k);
      for (Eigen::Index j = 0; j < n; ++j) {
        a(i, j) -= f * a(k, j);
        inv(i, j) -= f * inv(k, j);
      }
    }
  }
  return inv;
}

MatrixXb to_big(const MatrixXi& m) {
  MatrixXb out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
  return out;
}

MatrixXq to_rational(const MatrixXb& m) {
  MatrixXq out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = Rational(m(i, j));
  return out;
}

BigInt factorial(int n) {
  if (n < 0) throw ContractError("factorial of a negative number");
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

BigInt binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

BigInt falling_factorial(const BigInt& n, int k) {
  BigInt r = 1;
  for (int i = 0; i < k; ++i) r *= (n - i);
  return r;
}

BigInt catalan(int k) { return binomial(2 * k, k) / (k + 1); }
BigInt central_binomial(int k) { return binomial(2 * k, k); }
BigInt middle_binomial(int k) { return binomial(k, k / 2); }

BigInt bell(int k) {
  if (k < 0) throw ContractError("bell of a negative number");
  // Bell triangle
  std::vector<BigInt> row{1};
  for (int i = 1; i <= k; ++i) {
    std::vector<BigInt> next{row.back()};
    for (const auto& x : row) next.push_back(next.back() + x);
    row = std::move(next);
  }
  return row.front();
}

BigInt ipow(const BigInt& base, int exp) {
  if (exp < 0) throw ContractError("negative exponent for an integer power");
  return mp::pow(base, static_cast<unsigned>(exp));
}

Rational rpow(const Rational& base, int exp) {
  Rational r = 1;
  Rational b = exp < 0 ? Rational(1) / base : base;
  for (int i = 0; i < std::abs(exp); ++i) r *= b;
  return r;
}

std::vector<std::vector<int>> integer_partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> m(n + 1, 0);
  auto rec = [&](auto&& self, int remaining, int maxpart) -> void {
    if (remaining == 0) {
      out.push_back(m);
      return;
    }
    for (int p = std::min(remaining, maxpart); p >= 1; --p) {
      ++m[p];
      self(self, remaining - p, p);
      --m[p];
    }
  };
  rec(rec, n, n);
  return out;
}

int gcd_int(int a, int b) { return std::gcd(a, b); }

int euler_phi(int n) {
  int r = 0;
  for (int i = 1; i <= n; ++i)
    if (std::gcd(i, n) == 1) ++r;
  return r;
}

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace gsym
