#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "invpat/bigint.hpp"

namespace invpat {

/// Polynomial in one variable with arbitrary-precision integer coefficients.
/// coefficients()[k] is the coefficient of t^k; trailing zeros are trimmed.
class PolynomialInT {
 public:
  PolynomialInT() = default;
  PolynomialInT(BigInt constant);  // NOLINT: implicit from integers is convenient
  PolynomialInT(long constant) : PolynomialInT(BigInt(constant)) {}
  PolynomialInT(int constant) : PolynomialInT(BigInt(constant)) {}
  explicit PolynomialInT(std::vector<BigInt> coefficients);
  PolynomialInT(std::initializer_list<long> coefficients);

  static PolynomialInT monomial(BigInt c, std::size_t degree);

  const std::vector<BigInt>& coefficients() const noexcept { return c_; }
  bool is_zero() const noexcept { return c_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
  BigInt coefficient(std::size_t k) const { return k < c_.size() ? c_[k] : BigInt(0); }
  BigInt evaluate(const BigInt& t) const;

  PolynomialInT& operator+=(const PolynomialInT& o);
  PolynomialInT& operator-=(const PolynomialInT& o);
  PolynomialInT& operator*=(const PolynomialInT& o);
  friend PolynomialInT operator+(PolynomialInT a, const PolynomialInT& b) { return a += b; }
  friend PolynomialInT operator-(PolynomialInT a, const PolynomialInT& b) { return a -= b; }
  friend PolynomialInT operator*(PolynomialInT a, const PolynomialInT& b) { return a *= b; }
  friend bool operator==(const PolynomialInT&, const PolynomialInT&) = default;

  /// "1 + 2t + 3t^2", "1 - t", "0".
  std::string to_string(char var = 't') const;

 private:
  void trim();
  std::vector<BigInt> c_;
};

}  // namespace invpat
