#pragma once

#include "webworld/arith.hpp"
#include "webworld/diagram.hpp"
#include "webworld/polynomial.hpp"
#include "webworld/world.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace webworld {

/// Finite poset on elements 1..k stored as a reflexive-transitive relation.
class Poset {
 public:
  Poset() = default;
  /// Reflexive-transitive closure of the given (lower, upper) pairs, 1-based.
  /// Throws InvalidMatrix if the pairs contain a cycle.
  static Poset from_relations(int k, const std::vector<std::pair<int, int>>& pairs);
  static Poset chain(int k);
  static Poset antichain(int k);

  int size() const { return k_; }
  /// i ⪯ j, 1-based.
  bool leq(int i, int j) const { return rel_[(i - 1) * k_ + (j - 1)]; }
  bool less(int i, int j) const { return i != j && leq(i, j); }

  /// Cover relations (Hasse edges) as 1-based pairs, sorted.
  std::vector<std::pair<int, int>> covers() const;
  /// True when i < j in the order implies i < j as integers.
  bool is_naturally_labeled() const;
  bool is_partial_order() const;

  /// Relation matrix minimized over all relabelings; equal for isomorphic
  /// posets. Brute force, so k <= 8.
  std::string isomorphism_key() const;

  friend bool operator==(const Poset&, const Poset&) = default;
  friend auto operator<=>(const Poset&, const Poset&) = default;

 private:
  int k_ = 0;
  std::vector<bool> rel_;
};

/// An indecomposable piece of a diagram: its edges as they sit in the
/// parent, and the same edges height-compressed.
struct Block {
  std::vector<Edge> edges;
  WebDiagram normalized;
  int label = 0;
};

struct DecompositionPoset {
  std::vector<Block> blocks;  // blocks[i].label == i + 1
  Poset order;

  int size() const { return order.size(); }
  /// No two blocks have equal normalized diagrams (peg positions included).
  bool has_distinct_blocks() const;
};

/// Splits D into indecomposable blocks: strongly connected components of the
/// digraph with an arc e -> e' whenever an endpoint of e lies below an
/// endpoint of e' on a shared peg. Labels follow a topological order that
/// breaks ties by the smallest (peg, height) endpoint, so the labeling is
/// natural and the ⊕ of the blocks in label order reproduces D.
std::vector<Block> decompose(const WebDiagram& d);

DecompositionPoset decomposition_poset(const WebDiagram& d);

/// Linear extensions as label sequences, in lexicographic order.
using LinearExtension = std::vector<int>;
std::vector<LinearExtension> linear_extensions(const Poset& p);
int descents(const LinearExtension& le);

/// Order-preserving maps P -> [m], from the descent generating function.
BigInt omega(const Poset& p, unsigned m);
/// Surjective order-preserving maps P -> [m], by inclusion-exclusion on omega.
BigInt theta(const Poset& p, unsigned m);
/// Both counts by direct enumeration of all maps; |P| <= 8.
BigInt omega_direct(const Poset& p, unsigned m);
BigInt theta_direct(const Poset& p, unsigned m);

/// Sum over linear extensions of x^(1+des) (1+x)^(p-1-des).
IntPolynomial descent_colouring_poly(const Poset& p);
/// Sum over linear extensions of (-1)^des / (p * C(p-1, des)).
BigRational descent_mixing(const Poset& p);

/// Diagonal M and R entries of a diagram from its decomposition poset.
/// Throws RepeatedBlocks when two blocks coincide.
IntPolynomial diag_colouring_poly(const DecompositionPoset& p);
BigRational diag_mixing(const DecompositionPoset& p);

struct TracePair {
  IntPolynomial colouring;
  BigRational mixing;
};

/// Traces of M and R summed over the decomposition posets of every diagram
/// in the world. Requires every web-graph label to be 1 (LabelNotOne) and
/// distinct blocks in every diagram (RepeatedBlocks).
TracePair trace_via_posets(const WebWorld& w);

/// Multiplicity of each decomposition poset across the world, keyed by
/// isomorphism class.
std::map<std::string, std::size_t> poset_census(const WebWorld& w);

}  // namespace webworld
