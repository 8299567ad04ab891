#pragma once

#include "webworld/arith.hpp"

#include <span>
#include <vector>

namespace webworld {

/// Dense multivariate power series with exact rational coefficients, truncated
/// independently in each variable: terms with exponent e_v > orders[v] are
/// dropped after every operation.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(std::vector<int> orders);

  static TruncatedSeries constant(std::vector<int> orders, const BigRational& c);
  /// The single variable `var` (x_var).
  static TruncatedSeries variable(std::vector<int> orders, std::size_t var);
  /// 1 / (1 - x_var) = 1 + x_var + x_var^2 + ...
  static TruncatedSeries geometric(std::vector<int> orders, std::size_t var);

  const std::vector<int>& orders() const { return orders_; }
  std::size_t variables() const { return orders_.size(); }

  /// Coefficient of the monomial with the given exponents; throws
  /// SeriesTruncationTooSmall when it lies beyond the truncation.
  const BigRational& coefficient(std::span<const int> exponents) const;
  BigRational& at(std::span<const int> exponents);

  TruncatedSeries& operator+=(const TruncatedSeries& rhs);
  TruncatedSeries& operator-=(const TruncatedSeries& rhs);
  TruncatedSeries& operator*=(const BigRational& s);
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(TruncatedSeries a, const BigRational& s) { return a *= s; }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);

  TruncatedSeries pow(unsigned e) const;
  /// log(1 + S) for S with zero constant term.
  TruncatedSeries log1p() const;

  bool is_zero() const;
  const BigRational& constant_term() const { return coeffs_.front(); }

 private:
  std::size_t flat(std::span<const int> exponents) const;
  void unflat(std::size_t index, std::vector<int>& exponents) const;
  void check_compatible(const TruncatedSeries& rhs) const;

  std::vector<int> orders_;
  std::vector<std::size_t> strides_;
  std::vector<BigRational> coeffs_;
};

}  // namespace webworld
