#include "webworld/arith.hpp"
#include "webworld/error.hpp"

#include <boost/integer/common_factor_rt.hpp>

#include <mutex>

namespace webworld {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::PegOrderViolation: return "PegOrderViolation";
    case ErrorKind::HeightNotPermutation: return "HeightNotPermutation";
    case ErrorKind::DuplicateSlot: return "DuplicateSlot";
    case ErrorKind::PegOutOfRange: return "PegOutOfRange";
    case ErrorKind::EdgeNotInDiagram: return "EdgeNotInDiagram";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::NotSurjective: return "NotSurjective";
    case ErrorKind::BadRange: return "BadRange";
    case ErrorKind::WorldTooLarge: return "WorldTooLarge";
    case ErrorKind::DifferentWorlds: return "DifferentWorlds";
    case ErrorKind::RepeatedBlocks: return "RepeatedBlocks";
    case ErrorKind::LabelNotOne: return "LabelNotOne";
    case ErrorKind::SeriesTruncationTooSmall: return "SeriesTruncationTooSmall";
    case ErrorKind::BoundsTooLarge: return "BoundsTooLarge";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::IsolatedPeg: return "IsolatedPeg";
    case ErrorKind::NotTransitive: return "NotTransitive";
    case ErrorKind::InvalidMatrix: return "InvalidMatrix";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

BigInt factorial(unsigned n) {
  BigInt r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

BigInt ipow(const BigInt& base, unsigned exp) {
  return boost::multiprecision::pow(base, exp);
}

BigInt stirling2(unsigned n, unsigned k) {
  if (k > n) return 0;
  // Row-by-row triangle; small n only, so no caching.
  std::vector<BigInt> row(k + 1, 0);
  row[0] = 1;
  for (unsigned m = 1; m <= n; ++m) {
    for (unsigned j = std::min(m, k); j >= 1; --j) row[j] = j * row[j] + row[j - 1];
    row[0] = 0;
  }
  return row[k];
}

BigInt eulerian(unsigned n, unsigned k) {
  if (n == 0) return k == 0 ? 1 : 0;
  if (k < 1 || k > n) return 0;
  std::vector<BigInt> row{0, 1};  // n = 1
  for (unsigned m = 2; m <= n; ++m) {
    std::vector<BigInt> next(m + 1, 0);
    for (unsigned j = 1; j <= m; ++j) {
      BigInt stay = j < row.size() ? row[j] : BigInt(0);
      next[j] = j * stay + (m - j + 1) * row[j - 1];
    }
    row = std::move(next);
  }
  return row[k];
}

std::string to_string(const BigRational& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

BigInt lcm(const BigInt& a, const BigInt& b) {
  if (a == 0 || b == 0) return 0;
  return boost::multiprecision::abs(a / boost::multiprecision::gcd(a, b) * b);
}

}  // namespace webworld
