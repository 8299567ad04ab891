#pragma once

#include "webworld/arith.hpp"
#include "webworld/diagram.hpp"

#include <functional>
#include <span>
#include <vector>

namespace webworld {

/// Surjective map from edge positions (canonical order) onto colours 1..colours.
struct Colouring {
  std::vector<int> assignment;
  int colours = 0;

  /// Checks range and surjectivity; `colours` is taken as the largest value used.
  static Colouring from_assignment(std::vector<int> assignment);
  static Colouring constant(std::size_t length);

  friend bool operator==(const Colouring&, const Colouring&) = default;
};

/// Streams every surjection {1..L} -> {1..colours} exactly once: set
/// partitions as restricted-growth strings, then every assignment of colours
/// to blocks. Single consumer.
class SurjectiveColourings {
 public:
  SurjectiveColourings(int length, int colours);

  /// Writes the next colouring into `out`; false once exhausted.
  bool next(Colouring& out);
  /// Total number the stream yields: colours! * S(length, colours).
  BigInt expected_count() const;

 private:
  bool advance_partition();
  int length_;
  int colours_;
  std::vector<int> rgs_;
  std::vector<int> prefix_max_;
  std::vector<int> block_colour_;
  bool started_ = false;
  bool done_ = false;
};

/// Calls `visit` with every surjective colouring of `length` edges with
/// exactly `colours` colours (values 1-based). Same order as the stream.
void for_each_surjection(int length, int colours,
                         const std::function<void(std::span<const int>)>& visit);

/// rel(D_c(1)) ⊕ rel(D_c(2)) ⊕ ... ⊕ rel(D_c(l)), taken literally.
WebDiagram reconstruct(const WebDiagram& d, const Colouring& c);

/// Precomputed per-peg endpoint order of one diagram so many colourings can
/// be reconstructed cheaply: on every peg endpoints are re-stacked by
/// (colour, original height). Produces the same diagram as reconstruct().
class ReconstructionKernel {
 public:
  explicit ReconstructionKernel(const WebDiagram& d);

  /// Sorted edge list of the reconstruction; `colour` indexes canonical edges.
  /// Colour values only need to be ordered correctly, not surjective.
  void apply(std::span<const int> colour, std::vector<Edge>& out) const;
  WebDiagram apply(std::span<const int> colour) const;

 private:
  struct Endpoint {
    int edge;
    bool right;  // b side
  };
  const WebDiagram* diagram_;
  std::vector<std::vector<Endpoint>> by_peg_;  // endpoints in increasing height
  mutable std::vector<std::pair<int, int>> scratch_;
};

}  // namespace webworld
