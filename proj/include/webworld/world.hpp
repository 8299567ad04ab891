#pragma once

#include "webworld/diagram.hpp"

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <vector>

namespace webworld {

inline constexpr std::size_t kDefaultWorldGuard = 1'000'000;

/// All diagrams reachable from a seed by per-peg height permutations, in
/// lexicographic order of their sorted edge lists. Row/column order of every
/// world matrix follows this order.
class WebWorld {
 public:
  const std::vector<WebDiagram>& diagrams() const { return diagrams_; }
  std::size_t size() const { return diagrams_.size(); }
  const WebDiagram& operator[](std::size_t i) const { return diagrams_[i]; }

  std::optional<std::size_t> find(const WebDiagram& d) const;
  std::optional<std::size_t> find(const std::vector<Edge>& sorted_edges) const;
  std::size_t index_of(const WebDiagram& d) const;  // throws DifferentWorlds
  bool contains(const WebDiagram& d) const { return find(d).has_value(); }

  int peg_count() const { return diagrams_.empty() ? 0 : diagrams_.front().peg_count(); }
  std::size_t edge_count() const { return diagrams_.empty() ? 0 : diagrams_.front().size(); }

  friend WebWorld web_world(const WebDiagram& d, std::size_t guard);

 private:
  struct EdgesHash {
    std::size_t operator()(const std::vector<Edge>& edges) const noexcept;
  };
  std::vector<WebDiagram> diagrams_;
  std::unordered_map<std::vector<Edge>, std::size_t, EdgesHash> index_;
};

/// Orbit of `d` under every peg permutation family. Throws WorldTooLarge when
/// the orbit would exceed `guard` diagrams.
WebWorld web_world(const WebDiagram& d, std::size_t guard = kDefaultWorldGuard);

}  // namespace webworld
