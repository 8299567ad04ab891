#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace webworld {

/// One edge of a web diagram: left endpoint on peg `x` at height `a`,
/// right endpoint on peg `y` at height `b`. Pegs and heights are 1-based.
struct Edge {
  int x = 0;
  int y = 0;
  int a = 0;
  int b = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

std::string to_string(const Edge& e);

using PegPair = std::pair<int, int>;

/// A validated web diagram. Edges are kept sorted by (x, y, a, b), which is
/// also the order colourings index them in. The peg count `n` is part of the
/// diagram's identity, so trailing empty pegs survive rel and the sum.
class WebDiagram {
 public:
  WebDiagram() = default;

  /// Validates raw 4-tuples. `n` defaults to the largest peg referenced;
  /// an explicit `n` may add trailing empty pegs but never drop used ones.
  static WebDiagram validate(std::vector<Edge> raw, std::optional<int> n = std::nullopt);
  static WebDiagram validate(std::initializer_list<std::array<int, 4>> raw,
                             std::optional<int> n = std::nullopt);

  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t size() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }
  int peg_count() const { return n_; }

  /// Pegs(D): number of endpoints on each peg 1..n (index 0 is peg 1).
  std::vector<int> pegs() const;
  int endpoints_on(int peg) const;

  std::set<int> peg_set() const;
  std::set<PegPair> pegpairs_set() const;

  bool contains(const Edge& e) const;
  std::size_t index_of(const Edge& e) const;  // position in canonical order

  friend bool operator==(const WebDiagram&, const WebDiagram&) = default;
  friend auto operator<=>(const WebDiagram& l, const WebDiagram& r) {
    if (auto c = l.edges_ <=> r.edges_; c != 0) return c;
    return l.n_ <=> r.n_;
  }

  std::string to_string() const;

 private:
  struct Trusted {};
  WebDiagram(Trusted, std::vector<Edge> sorted_edges, int n)
      : edges_(std::move(sorted_edges)), n_(n) {}
  friend WebDiagram make_unchecked(std::vector<Edge> edges, int n);

  std::vector<Edge> edges_;
  int n_ = 0;
};

/// Sorts `edges` and wraps them without re-validating. Only for internal
/// hot paths whose construction already guarantees the diagram invariants.
WebDiagram make_unchecked(std::vector<Edge> edges, int n);

struct WebDiagramHash {
  std::size_t operator()(const WebDiagram& d) const noexcept;
};

/// D ⊕ D2: D2 stacked on top of D, heights on each peg shifted by the
/// number of endpoints D already has there.
WebDiagram sum(const WebDiagram& bottom, const WebDiagram& top);

/// Height-compresses a subset of D's edges into a subweb diagram on the same
/// number of pegs.
WebDiagram rel(const WebDiagram& d, std::span<const Edge> subset);

/// One permutation per peg; perms[i] is a permutation of 1..p_{i+1}(D),
/// stored 1-based (perms[i][j-1] is the image of height j).
struct PegPermutationFamily {
  std::vector<std::vector<int>> perms;

  static PegPermutationFamily identity(const WebDiagram& d);
  /// Applies `inner` first, then `outer`.
  static PegPermutationFamily compose(const PegPermutationFamily& outer,
                                      const PegPermutationFamily& inner);
};

WebDiagram apply_permutations(const WebDiagram& d, const PegPermutationFamily& fam);

}  // namespace webworld
