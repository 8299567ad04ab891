#pragma once

#include "webworld/arith.hpp"
#include "webworld/enumeration.hpp"

#include <vector>

namespace webworld {

/// Every peg but the last has an edge going right and every peg but the
/// first has an edge coming in: only the first column and the last row of
/// Represent(W) are zero. Throws IsolatedPeg if some peg has no edge at all.
bool is_transitive(const RepresentMatrix& a);

/// Upper-triangular (diagonal allowed) square matrix of non-negative entries.
using CoreMatrix = std::vector<std::vector<int>>;

/// Drops the first column and the last row. Throws NotTransitive.
CoreMatrix core_matrix(const RepresentMatrix& a);
/// Inverse of core_matrix: pads a zero first column and zero last row.
/// Throws InvalidMatrix for non-square or lower-triangular input.
RepresentMatrix reattach(const CoreMatrix& core);

inline constexpr int kMaxTransitiveEdges = 6;

/// Transitive worlds with exactly t edges (pegs 2..t+1), in enumeration order.
/// Throws BoundsTooLarge above kMaxTransitiveEdges.
std::vector<RepresentMatrix> transitive_worlds(int t);
BigInt count_transitive(int t);

}  // namespace webworld
