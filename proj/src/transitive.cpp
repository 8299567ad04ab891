#include "webworld/transitive.hpp"
#include "webworld/error.hpp"

namespace webworld {

bool is_transitive(const RepresentMatrix& a) {
  const int m = a.size();
  for (int i = 1; i <= m; ++i)
    if (a.hook(i) == 0) throw WebError(ErrorKind::IsolatedPeg, "peg " + std::to_string(i) + " has no edges");
  for (int i = 1; i < m; ++i)
    if (a.row_sum(i) == 0) return false;
  for (int j = 2; j <= m; ++j)
    if (a.column_sum(j) == 0) return false;
  return true;
}

CoreMatrix core_matrix(const RepresentMatrix& a) {
  if (a.size() < 2 || a.has_isolated_peg() || !is_transitive(a))
    throw WebError(ErrorKind::NotTransitive, "core matrix needs a transitive world");
  const int k = a.size() - 1;
  CoreMatrix core(k, std::vector<int>(k, 0));
  for (int i = 1; i <= k; ++i)
    for (int j = 2; j <= a.size(); ++j) core[i - 1][j - 2] = a(i, j);
  return core;
}

RepresentMatrix reattach(const CoreMatrix& core) {
  const int k = static_cast<int>(core.size());
  RepresentMatrix a = RepresentMatrix::zero(k + 1);
  for (int i = 0; i < k; ++i) {
    if (static_cast<int>(core[i].size()) != k)
      throw WebError(ErrorKind::InvalidMatrix, "core matrix must be square");
    for (int j = 0; j < k; ++j) {
      if (core[i][j] < 0 || (j < i && core[i][j] != 0))
        throw WebError(ErrorKind::InvalidMatrix, "core matrix must be non-negative and upper triangular");
      if (core[i][j]) a.set(i + 1, j + 2, core[i][j]);
    }
  }
  return a;
}

std::vector<RepresentMatrix> transitive_worlds(int t) {
  if (t < 0 || t > kMaxTransitiveEdges)
    throw WebError(ErrorKind::BoundsTooLarge,
                   "transitive counting supports 0.." + std::to_string(kMaxTransitiveEdges) + " edges");
  std::vector<RepresentMatrix> out;
  // A transitive world on m pegs needs at least m - 1 edges.
  for_each_world({.max_pegs = t + 1, .max_edges = t, .min_pegs = 2, .min_edges = t}, WorldFilter::Transitive,
                 [&](const RepresentMatrix& a) { out.push_back(a); });
  return out;
}

BigInt count_transitive(int t) { return BigInt(transitive_worlds(t).size()); }

}  // namespace webworld
