#pragma once

#include "webworld/arith.hpp"
#include "webworld/colouring.hpp"
#include "webworld/polynomial.hpp"
#include "webworld/world.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace webworld {

/// Dense square matrix indexed by the canonical diagram order of a world.
template <class E>
class WorldMatrix {
 public:
  WorldMatrix() = default;
  explicit WorldMatrix(const WebWorld& world)
      : world_(&world), dim_(world.size()), entries_(dim_ * dim_) {}

  const WebWorld& world() const { return *world_; }
  std::size_t dimension() const { return dim_; }
  const E& operator()(std::size_t row, std::size_t col) const { return entries_[row * dim_ + col]; }
  E& operator()(std::size_t row, std::size_t col) { return entries_[row * dim_ + col]; }
  std::span<const E> row(std::size_t r) const { return {entries_.data() + r * dim_, dim_}; }

 private:
  const WebWorld* world_ = nullptr;
  std::size_t dim_ = 0;
  std::vector<E> entries_;
};

using ColouringMatrix = WorldMatrix<IntPolynomial>;
using MixingMatrix = WorldMatrix<BigRational>;

struct MatrixOptions {
  /// Largest world for which full matrices are materialized.
  std::size_t max_dimension = 5000;
};

/// True when both diagrams belong to one web world (same peg count and the
/// same multiset of peg pairs).
bool same_world(const WebDiagram& d1, const WebDiagram& d2);

/// f(D1, D2, l): surjective l-colourings of D1 whose reconstruction is D2.
BigInt f_count(const WebDiagram& d1, const WebDiagram& d2, int colours);

/// All f(D1, D2, l) for l = 0..|D1| (index 0 is always zero).
std::vector<BigInt> f_counts(const WebDiagram& d1, const WebDiagram& d2);

/// Sum over l of x^l f(D1, D2, l).
IntPolynomial colouring_entry(const WebDiagram& d1, const WebDiagram& d2);

/// Sum over l of (-1)^(l-1)/l * f(D1, D2, l).
BigRational mixing_entry(const WebDiagram& d1, const WebDiagram& d2);

/// Alternating-harmonic weighting of a count vector (index = colour count).
BigRational mixing_from_counts(std::span<const BigInt> counts);

/// -∫_0^1 M(-x)/x dx, integrating term by term (∫_0^1 x^(l-1) dx = 1/l).
BigRational mixing_from_polynomial(const IntPolynomial& m);

/// Full web-colouring matrix; each row is filled by enumerating every
/// colouring of the row diagram once.
ColouringMatrix colouring_matrix(const WebWorld& w, const MatrixOptions& opts = {});
MixingMatrix mixing_matrix(const WebWorld& w, const MatrixOptions& opts = {});
MixingMatrix mixing_matrix(const ColouringMatrix& m);

/// Ordered Bell polynomial: sum over l of x^l S(m, l) l!.
IntPolynomial ordered_bell_polynomial(unsigned m);

IntPolynomial trace(const ColouringMatrix& m);
BigRational trace(const MixingMatrix& r);

/// Diagonal-only traces; never materialize off-diagonal entries.
IntPolynomial colouring_trace(const WebWorld& w);
BigRational mixing_trace(const WebWorld& w);

std::vector<IntPolynomial> row_sums(const ColouringMatrix& m);
std::vector<BigRational> row_sums(const MixingMatrix& r);

/// Exact rank by fraction-free elimination after clearing denominators.
std::size_t rank(const MixingMatrix& r);
std::size_t rank(std::span<const BigRational> dense, std::size_t dim);

/// Exact R * R == R.
bool is_idempotent(const MixingMatrix& r);
bool is_idempotent(std::span<const BigRational> dense, std::size_t dim);

/// Exact dense product of two dim x dim rational matrices.
std::vector<BigRational> multiply(std::span<const BigRational> a, std::span<const BigRational> b,
                                  std::size_t dim);

/// CSV with one matrix row per line; rationals as "p/q", polynomials as
/// "c0;c1;c2".
std::string to_csv(const MixingMatrix& r);
std::string to_csv(const ColouringMatrix& m);

}  // namespace webworld
