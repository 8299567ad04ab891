#pragma once

// The three exactly solvable world families and the colour-sequence
// statistics their closed forms are phrased in.

#include "webworld/arith.hpp"
#include "webworld/colouring.hpp"
#include "webworld/diagram.hpp"
#include "webworld/polynomial.hpp"
#include "webworld/world.hpp"

#include <array>
#include <span>
#include <vector>

namespace webworld {

using Permutation = std::vector<int>;  // one-line notation, 1-based values

struct EntryPair {
  IntPolynomial colouring;
  BigRational mixing;
};

// ---- Case 1: Pegs = (1, ..., 1, n) ----

/// D_pi = {(pi(i), n+1, 1, i)}.
WebDiagram case1_diagram(const Permutation& pi);
/// Inverse of case1_diagram.
Permutation case1_decode(const WebDiagram& d);
WebWorld case1_world(int n);

/// Positions sorted by (colour, position): the lexicographically smallest
/// permutation that sorts the colour sequence.
Permutation alpha(std::span<const int> colours);
/// (pi o alpha)(i) = pi(alpha(i)).
Permutation compose(const Permutation& outer, const Permutation& inner);

struct MinimalColouring {
  std::vector<std::vector<int>> blocks;  // letters taken in each pass over pi
  int passes = 0;
  std::vector<int> by_position;  // c(j) = pass containing pi(j)
  std::vector<int> by_letter;    // c(v) = pass containing letter v; canonical edge order of D_pi
};

/// Repeated left-to-right passes over pi, each pass taking the letters of
/// sigma in order for as long as they keep appearing.
MinimalColouring minimal(const Permutation& pi, const Permutation& sigma);

/// f(D_pi, D_sigma, k) = C(n - m, k - m) with m = minimal(pi, sigma).
BigInt case1_f(const Permutation& pi, const Permutation& sigma, int k);
/// x^m (1+x)^(n-m) and (-1)^(m-1) / (n C(n-1, m-1)).
EntryPair case1_entries(const Permutation& pi, const Permutation& sigma);
/// trace(M) = n! x (1+x)^(n-1), trace(R) = (n-1)!.
EntryPair case1_traces(int n);

// ---- Cases 2 and 3: sign-coded chains ----

using SignCode = std::vector<int>;  // entries +1 / -1

enum class ChainVariant { Linear, Cyclic };

/// Case 2 diagram on n+2 pegs with n+1 edges e_i = (i, i+1, x_i, y_(i+1));
/// pi(i) = +1 when e_i sits below e_(i+1) on peg i+1.
WebDiagram case2_diagram(const SignCode& pi);
SignCode case2_decode(const WebDiagram& d);
WebWorld case2_world(int n);

/// Case 3 edges in label order e_1..e_n: the Case 2 chain on n pegs closed
/// by e_n = (1, n, y_1, x_n); pi(j) = x_j - y_j. n >= 2. For n = 2 the two
/// edges are parallel, so only the labeled form is faithful.
std::vector<Edge> case3_edges(const SignCode& pi);
WebDiagram case3_diagram(const SignCode& pi);
SignCode case3_decode(std::span<const Edge> labeled);
/// Labeled edges of an unlabeled Case 3 diagram; needs n >= 3.
std::vector<Edge> case3_label(const WebDiagram& d);
WebWorld case3_world(int n);

/// Reconstruction that keeps edge identities: on every peg endpoints are
/// re-stacked by (colour, height). colours[i] colours edges[i].
std::vector<Edge> reconstruct_labeled(std::span<const Edge> edges, std::span<const int> colours);

struct DEATriple {
  std::vector<int> des, equ, asc;  // 1-based positions
  bool cyclic = false;

  friend bool operator==(const DEATriple&, const DEATriple&) = default;
};

/// Linear: positions 1..len-1 compare c(i) with c(i+1). Cyclic: positions
/// 1..len with c(len+1) := c(1).
DEATriple dea(std::span<const int> c, bool cyclic);

struct YPartition {
  std::array<std::vector<int>, 4> y;  // y[0] is Y_1
};

/// i lands in Y_((5 + 2 sigma_i - pi_i) / 2). Throws DimensionMismatch.
YPartition y_partition(const SignCode& pi, const SignCode& sigma);

/// Sequences in Colours(length, k) with the given DEA sets.
BigInt wordeuler(int length, int k, const DEATriple& target);

/// f(D_pi, D_sigma, k) from the Y-partition sum. Case 2 colours n+1 edges
/// with linear statistics; Case 3 colours n edges cyclically, and position i
/// there sits on peg i+1, so the Y-partition is taken of the codes rotated
/// left by one.
BigInt case23_f(const SignCode& pi, const SignCode& sigma, int k, ChainVariant variant);
EntryPair case23_entries(const SignCode& pi, const SignCode& sigma, ChainVariant variant);

/// Closed forms: Case 2 trace(R) = 1, trace(M) = sum x^k k! (S(n+2,k+1) -
/// S(n+1,k+1)); Case 3 trace(R) = n+1, trace(M) = x + sum x^k k! S(n+1,k+1).
EntryPair case2_traces(int n);
EntryPair case3_traces(int n);

/// Case 3 entries and traces by brute force over labeled colourings.
BigInt case3_labeled_f(const SignCode& pi, const SignCode& sigma, int k);
EntryPair case3_labeled_traces(int n);

/// Every sign code of length n in lexicographic order (-1 before +1).
std::vector<SignCode> all_sign_codes(int n);

// ---- Colour sequences ----

struct KeysCounts {
  BigInt all, neq, eq;
  friend bool operator==(const KeysCounts&, const KeysCounts&) = default;
};

/// Surjective colour sequences of length n over k colours without equal
/// neighbours, split by whether the first and last colours differ.
KeysCounts keys_counts(int n, int k);
KeysCounts keys_counts_direct(int n, int k);

/// c = <w, A>: A holds the positions repeating their left neighbour, w the
/// colours that remain.
struct KeyDecomposition {
  std::vector<int> w;
  std::vector<int> a;
};
KeyDecomposition key_decomposition(std::span<const int> c);
std::vector<int> key_compose(const KeyDecomposition& d, int length);

/// (1/k!) sum_i (-1)^(k-i) C(k,i) (i+1)^n, which equals S(n+1, k+1).
BigRational stirling_lemma_lhs(int n, int k);

}  // namespace webworld
