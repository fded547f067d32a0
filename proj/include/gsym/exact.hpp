#pragma once

#include <vector>

#include "gsym/types.hpp"

namespace gsym {

/// Fraction-free (Bareiss) determinant over an integral domain. Every division
/// is exact, so `Scalar` may be BigInt.
template <typename Scalar>
Scalar bareiss_det(Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> m) {
  if (m.rows() != m.cols()) throw ContractError("determinant of a non-square matrix");
  const Eigen::Index n = m.rows();
  if (n == 0) return Scalar(1);
  Scalar sign(1), prev(1);
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      Eigen::Index p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return Scalar(0);
      m.row(k).swap(m.row(p));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i)
      for (Eigen::Index j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

/// Determinant over a field by Gaussian elimination (exact for Rational).
template <typename Scalar>
Scalar gauss_det(Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> m) {
  if (m.rows() != m.cols()) throw ContractError("determinant of a non-square matrix");
  const Eigen::Index n = m.rows();
  Scalar det(1);
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index p = k;
    while (p < n && m(p, k) == 0) ++p;
    if (p == n) return Scalar(0);
    if (p != k) {
      m.row(k).swap(m.row(p));
      det = -det;
    }
    det *= m(k, k);
    for (Eigen::Index i = k + 1; i < n; ++i) {
      if (m(i, k) == 0) continue;
      Scalar f = m(i, k) / m(k, k);
      for (Eigen::Index j = k; j < n; ++j) m(i, j) -= f * m(k, j);
    }
  }
  return det;
}

/// Exact inverse by Gauss-Jordan elimination; throws on a singular matrix.
MatrixXq inverse_exact(const MatrixXq& m);

MatrixXb to_big(const MatrixXi& m);
MatrixXq to_rational(const MatrixXb& m);

BigInt factorial(int n);
BigInt binomial(int n, int k);
BigInt falling_factorial(const BigInt& n, int k);
BigInt catalan(int k);
BigInt central_binomial(int k);
BigInt middle_binomial(int k);
BigInt bell(int k);
BigInt ipow(const BigInt& base, int exp);
Rational rpow(const Rational& base, int exp);

/// All partitions of n as multiplicity vectors m[1..n] (m[0] unused).
std::vector<std::vector<int>> integer_partitions(int n);

int euler_phi(int n);
bool is_prime(int n);
int gcd_int(int a, int b);

}  // namespace gsym
