#pragma once

// Exact integer and rational scalars plus the small combinatorial tables
// (binomials, factorials, Stirling numbers) every other module leans on.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace webworld {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

BigInt factorial(unsigned n);
BigInt binomial(std::int64_t n, std::int64_t k);  // zero outside 0 <= k <= n
BigInt ipow(const BigInt& base, unsigned exp);     // 0^0 == 1

/// Stirling number of the second kind S(n, k) from the triangle recurrence.
BigInt stirling2(unsigned n, unsigned k);

/// Eulerian number counting permutations of [n] with exactly k - 1 descents
/// (1-based: k ranges over 1..n).
BigInt eulerian(unsigned n, unsigned k);

/// "p/q" with q > 0, or "p" when the value is an integer.
std::string to_string(const BigRational& r);

BigInt lcm(const BigInt& a, const BigInt& b);

}  // namespace webworld
