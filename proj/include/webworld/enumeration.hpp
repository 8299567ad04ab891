#pragma once

#include "webworld/arith.hpp"
#include "webworld/diagram.hpp"
#include "webworld/world.hpp"

#include <compare>
#include <functional>
#include <map>
#include <utility>
#include <vector>

namespace webworld {

/// Strictly upper-triangular matrix of edge multiplicities between peg
/// pairs. Indices are 1-based pegs.
class RepresentMatrix {
 public:
  RepresentMatrix() = default;
  static RepresentMatrix zero(int pegs);
  /// Throws InvalidMatrix unless square, non-negative and strictly upper
  /// triangular.
  static RepresentMatrix from_rows(const std::vector<std::vector<int>>& rows);

  int size() const { return m_; }
  int operator()(int i, int j) const { return a_[(i - 1) * m_ + (j - 1)]; }
  void set(int i, int j, int value);

  std::vector<std::vector<int>> rows() const;
  int total() const;          // |EdgeSet|
  int nonzero_count() const;  // |PegpairsSet|
  int row_sum(int i) const;
  int column_sum(int j) const;
  /// Entries in the hook through (i, i): edges incident to peg i.
  int hook(int i) const { return row_sum(i) + column_sum(i); }
  bool has_isolated_peg() const;

  friend bool operator==(const RepresentMatrix&, const RepresentMatrix&) = default;
  friend auto operator<=>(const RepresentMatrix&, const RepresentMatrix&) = default;

 private:
  int m_ = 0;
  std::vector<int> a_;
};

RepresentMatrix represent(const WebDiagram& d);
RepresentMatrix represent(const WebWorld& w);

/// WDM(D): cell (x, y) holds the (a, b) height pairs of the edges from peg x
/// to peg y, sorted.
struct WDMatrix {
  int n = 0;
  std::vector<std::vector<std::pair<int, int>>> cells;  // row-major, n * n

  const std::vector<std::pair<int, int>>& at(int x, int y) const { return cells[(x - 1) * n + (y - 1)]; }
};
WDMatrix wdm(const WebDiagram& d);

/// Pegs as vertices, peg pairs as edges labelled by their multiplicity.
struct WebGraph {
  int vertices = 0;
  std::map<PegPair, int> labels;
};
WebGraph web_graph(const RepresentMatrix& a);
WebGraph web_graph(const WebWorld& w);

/// Connected web graph on all pegs.
bool is_proper(const RepresentMatrix& a);
bool is_proper(const WebWorld& w);

/// A diagram of the world A describes: endpoints are stacked on each peg in
/// row-major order of the cells.
WebDiagram diagram_from_represent(const RepresentMatrix& a);

/// prod_i (a_i* + a_*i)! / prod_{i<j} a_ij!
BigInt world_size(const RepresentMatrix& a);

/// Worlds on pegs within {1..m} with t edges over n distinct peg pairs.
BigInt nww(int m, int t, int n);                       // direct enumeration
BigInt nww_series_coefficient(int m, int t, int n);    // from the generating function
/// Worlds on exactly the pegs {1..a} (no isolated peg), b edges, c pairs.
BigInt nwwnip(int a, int b, int c);                    // closed form
BigInt nwwnip_direct(int a, int b, int c);
/// Proper worlds with m edges over t pairs on exactly n pegs.
BigInt npww(int m, int t, int n);                      // log of the exponential generating function
BigInt npww_direct(int m, int t, int n);

/// npww for every m <= max_edges, t <= max_pairs, n <= max_pegs from one
/// series expansion; table[m][t][n].
std::vector<std::vector<std::vector<BigInt>>> npww_table(int max_edges, int max_pairs, int max_pegs);

enum class WorldFilter { All, NoIsolatedPegs, Proper, Transitive };

bool passes(const RepresentMatrix& a, WorldFilter filter);

struct EnumerationBounds {
  int max_pegs = 0;
  int max_edges = 0;
  int min_pegs = 2;
  int min_edges = 0;
};

/// Visits every strictly upper-triangular matrix of size min_pegs..max_pegs
/// with entry sum min_edges..max_edges exactly once (sizes ascending, then
/// totals ascending, then lexicographic) that passes `filter`. Throws
/// BoundsTooLarge when the stream would exceed ten million matrices.
void for_each_world(const EnumerationBounds& bounds, WorldFilter filter,
                    const std::function<void(const RepresentMatrix&)>& visit);
std::vector<RepresentMatrix> enumerate_worlds(int max_pegs, int max_edges,
                                              WorldFilter filter = WorldFilter::All);

/// Worlds with exactly t edges and no isolated pegs on at most t + 1 pegs.
std::vector<RepresentMatrix> edge_census(int t);

}  // namespace webworld
