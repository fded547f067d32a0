#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>

namespace gsym {

namespace mp = boost::multiprecision;

// Expression templates are disabled so the big-number types behave as plain
// values inside Eigen containers and `auto` declarations.
using BigInt = mp::number<mp::cpp_int_backend<>, mp::et_off>;
using Rational = mp::number<mp::cpp_rational_backend, mp::et_off>;

using MatrixXb = Eigen::Matrix<BigInt, Eigen::Dynamic, Eigen::Dynamic>;
using VectorXb = Eigen::Matrix<BigInt, Eigen::Dynamic, 1>;
using MatrixXq = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using MatrixXi = Eigen::MatrixXi;

/// A precondition of an operation was violated by its input.
class ContractError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input text could not be parsed; `line()` is 1-based, 0 when not line-bound.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// The request exceeds a documented size cap and was refused.
class RefusalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kExhaustiveCap = 64;
inline constexpr int kNumericCap = 4096;

inline std::string to_decimal(const BigInt& v) { return v.str(); }

}  // namespace gsym
