#include "webworld/world.hpp"
#include "webworld/error.hpp"

#include <algorithm>
#include <deque>

namespace webworld {

std::size_t WebWorld::EdgesHash::operator()(const std::vector<Edge>& edges) const noexcept {
  std::size_t h = edges.size();
  for (const Edge& e : edges)
    for (int v : {e.x, e.y, e.a, e.b}) h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

std::optional<std::size_t> WebWorld::find(const std::vector<Edge>& sorted_edges) const {
  auto it = index_.find(sorted_edges);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> WebWorld::find(const WebDiagram& d) const {
  if (d.peg_count() != peg_count()) return std::nullopt;
  return find(d.edges());
}

std::size_t WebWorld::index_of(const WebDiagram& d) const {
  if (auto i = find(d)) return *i;
  throw WebError(ErrorKind::DifferentWorlds, d.to_string() + " is not in this world");
}

namespace {

// Swaps the endpoints at heights h and h + 1 on `peg`.
void swap_adjacent(std::vector<Edge>& edges, int peg, int h) {
  for (Edge& e : edges) {
    if (e.x == peg) {
      if (e.a == h) e.a = h + 1;
      else if (e.a == h + 1) e.a = h;
    }
    if (e.y == peg) {
      if (e.b == h) e.b = h + 1;
      else if (e.b == h + 1) e.b = h;
    }
  }
}

}  // namespace

WebWorld web_world(const WebDiagram& d, std::size_t guard) {
  // Adjacent height swaps on each peg generate every peg permutation family,
  // so a breadth-first closure under them visits exactly the orbit.
  const auto pegs = d.pegs();
  std::vector<std::vector<Edge>> found{d.edges()};
  std::unordered_map<std::vector<Edge>, std::size_t, WebWorld::EdgesHash> seen;
  seen.emplace(d.edges(), 0);
  for (std::size_t cursor = 0; cursor < found.size(); ++cursor) {
    for (int peg = 1; peg <= d.peg_count(); ++peg) {
      for (int h = 1; h < pegs[peg - 1]; ++h) {
        std::vector<Edge> next = found[cursor];
        swap_adjacent(next, peg, h);
        std::sort(next.begin(), next.end());
        if (seen.contains(next)) continue;
        if (found.size() >= guard)
          throw WebError(ErrorKind::WorldTooLarge, "world exceeds " + std::to_string(guard) + " diagrams");
        seen.emplace(next, found.size());
        found.push_back(std::move(next));
      }
    }
  }
  std::sort(found.begin(), found.end());

  WebWorld w;
  w.diagrams_.reserve(found.size());
  w.index_.reserve(found.size());
  for (auto& edges : found) {
    w.index_.emplace(edges, w.diagrams_.size());
    w.diagrams_.push_back(make_unchecked(std::move(edges), d.peg_count()));
  }
  return w;
}

}  // namespace webworld
