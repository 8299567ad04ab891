#pragma once

#include "webworld/arith.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace webworld {

/// Univariate polynomial with big-integer coefficients, index = degree.
/// Always kept canonical: no trailing zero coefficients, so the zero
/// polynomial has an empty coefficient vector.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coefficients);
  IntPolynomial(std::initializer_list<long long> coefficients);

  static IntPolynomial monomial(unsigned degree, BigInt coefficient = 1);
  /// (1 + x)^e
  static IntPolynomial one_plus_x_pow(unsigned e);

  const std::vector<BigInt>& coefficients() const { return coeffs_; }
  BigInt coefficient(std::size_t degree) const;
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  /// Adds c * x^degree in place.
  void add_term(std::size_t degree, const BigInt& c);

  IntPolynomial& operator+=(const IntPolynomial& rhs);
  IntPolynomial& operator-=(const IntPolynomial& rhs);
  IntPolynomial& operator*=(const BigInt& scalar);
  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(IntPolynomial a, const BigInt& s) { return a *= s; }
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  BigInt evaluate(const BigInt& x) const;
  IntPolynomial derivative() const;

  /// "c0;c1;c2" coefficient string; the zero polynomial prints as "0".
  std::string to_csv() const;
  /// Human form such as "6x^3+10x^2+4x".
  std::string to_string() const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

}  // namespace webworld
