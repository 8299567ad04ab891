#include "webworld/series.hpp"
#include "webworld/error.hpp"

namespace webworld {

TruncatedSeries::TruncatedSeries(std::vector<int> orders) : orders_(std::move(orders)) {
  std::size_t size = 1;
  strides_.resize(orders_.size());
  for (std::size_t v = orders_.size(); v-- > 0;) {
    if (orders_[v] < 0) throw WebError(ErrorKind::SeriesTruncationTooSmall, "negative truncation order");
    strides_[v] = size;
    size *= static_cast<std::size_t>(orders_[v]) + 1;
  }
  coeffs_.assign(size, BigRational(0));
}

TruncatedSeries TruncatedSeries::constant(std::vector<int> orders, const BigRational& c) {
  TruncatedSeries s(std::move(orders));
  s.coeffs_[0] = c;
  return s;
}

TruncatedSeries TruncatedSeries::variable(std::vector<int> orders, std::size_t var) {
  TruncatedSeries s(std::move(orders));
  if (s.orders_.at(var) >= 1) s.coeffs_[s.strides_[var]] = 1;
  return s;
}

TruncatedSeries TruncatedSeries::geometric(std::vector<int> orders, std::size_t var) {
  TruncatedSeries s(std::move(orders));
  for (int e = 0; e <= s.orders_.at(var); ++e) s.coeffs_[e * s.strides_[var]] = 1;
  return s;
}

std::size_t TruncatedSeries::flat(std::span<const int> exponents) const {
  if (exponents.size() != orders_.size())
    throw WebError(ErrorKind::DimensionMismatch, "exponent vector has wrong length");
  std::size_t idx = 0;
  for (std::size_t v = 0; v < orders_.size(); ++v) {
    if (exponents[v] < 0 || exponents[v] > orders_[v])
      throw WebError(ErrorKind::SeriesTruncationTooSmall,
                     "exponent " + std::to_string(exponents[v]) + " of variable " + std::to_string(v) +
                         " exceeds truncation order " + std::to_string(orders_[v]));
    idx += exponents[v] * strides_[v];
  }
  return idx;
}

void TruncatedSeries::unflat(std::size_t index, std::vector<int>& exponents) const {
  exponents.resize(orders_.size());
  for (std::size_t v = 0; v < orders_.size(); ++v) {
    exponents[v] = static_cast<int>(index / strides_[v]);
    index %= strides_[v];
  }
}

const BigRational& TruncatedSeries::coefficient(std::span<const int> exponents) const {
  return coeffs_[flat(exponents)];
}

BigRational& TruncatedSeries::at(std::span<const int> exponents) { return coeffs_[flat(exponents)]; }

void TruncatedSeries::check_compatible(const TruncatedSeries& rhs) const {
  if (orders_ != rhs.orders_) throw WebError(ErrorKind::DimensionMismatch, "series truncations differ");
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& rhs) {
  check_compatible(rhs);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& rhs) {
  check_compatible(rhs);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const BigRational& s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  a.check_compatible(b);
  TruncatedSeries out(a.orders_);
  const std::size_t vars = a.orders_.size();
  struct Term {
    std::size_t index;
    std::vector<int> exps;
  };
  auto support = [&](const TruncatedSeries& s) {
    std::vector<Term> terms;
    for (std::size_t i = 0; i < s.coeffs_.size(); ++i) {
      if (s.coeffs_[i] == 0) continue;
      Term t{i, {}};
      s.unflat(i, t.exps);
      terms.push_back(std::move(t));
    }
    return terms;
  };
  const auto ta = support(a);
  const auto tb = support(b);
  for (const auto& x : ta) {
    for (const auto& y : tb) {
      bool inside = true;
      for (std::size_t v = 0; v < vars && inside; ++v) inside = x.exps[v] + y.exps[v] <= a.orders_[v];
      // Flat indices add because strides are shared and no digit overflows.
      if (inside) out.coeffs_[x.index + y.index] += a.coeffs_[x.index] * b.coeffs_[y.index];
    }
  }
  return out;
}

TruncatedSeries TruncatedSeries::pow(unsigned e) const {
  TruncatedSeries result = constant(orders_, 1);
  TruncatedSeries base = *this;
  while (e) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e) base = base * base;
  }
  return result;
}

TruncatedSeries TruncatedSeries::log1p() const {
  if (coeffs_.front() != 0)
    throw WebError(ErrorKind::InvalidMatrix, "log1p needs a series without constant term");
  // S is nilpotent under truncation, so the alternating series terminates.
  TruncatedSeries result(orders_);
  TruncatedSeries power = *this;
  for (unsigned k = 1; !power.is_zero(); ++k) {
    TruncatedSeries term = power * BigRational(BigInt(1), BigInt(k));
    if (k % 2) result += term;
    else result -= term;
    power = power * *this;
  }
  return result;
}

bool TruncatedSeries::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

}  // namespace webworld
