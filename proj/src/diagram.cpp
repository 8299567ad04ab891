#include "webworld/diagram.hpp"
#include "webworld/error.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace webworld {

std::string to_string(const Edge& e) {
  std::ostringstream os;
  os << '(' << e.x << ',' << e.y << ',' << e.a << ',' << e.b << ')';
  return os.str();
}

WebDiagram WebDiagram::validate(std::vector<Edge> raw, std::optional<int> n) {
  int max_peg = 0;
  for (const Edge& e : raw) {
    if (e.x < 1) throw WebError(ErrorKind::PegOutOfRange, "peg index below 1 in " + webworld::to_string(e));
    if (e.x >= e.y) throw WebError(ErrorKind::PegOrderViolation, "x >= y in " + webworld::to_string(e));
    if (e.a < 1 || e.b < 1)
      throw WebError(ErrorKind::HeightNotPermutation, "height below 1 in " + webworld::to_string(e));
    max_peg = std::max(max_peg, e.y);
  }
  if (n && *n < max_peg)
    throw WebError(ErrorKind::PegOutOfRange,
                   "peg " + std::to_string(max_peg) + " exceeds n = " + std::to_string(*n));
  const int pegs = n ? *n : max_peg;

  // slots[peg] = heights seen on that peg
  std::vector<std::vector<int>> slots(pegs + 1);
  for (const Edge& e : raw) {
    for (auto [peg, h] : {std::pair{e.x, e.a}, std::pair{e.y, e.b}}) {
      auto& s = slots[peg];
      if (std::find(s.begin(), s.end(), h) != s.end())
        throw WebError(ErrorKind::DuplicateSlot, "peg " + std::to_string(peg) + " height " +
                                                     std::to_string(h) + " used twice");
      s.push_back(h);
    }
  }
  for (int peg = 1; peg <= pegs; ++peg) {
    auto& s = slots[peg];
    std::sort(s.begin(), s.end());
    for (std::size_t i = 0; i < s.size(); ++i)
      if (s[i] != static_cast<int>(i) + 1)
        throw WebError(ErrorKind::HeightNotPermutation,
                       "heights on peg " + std::to_string(peg) + " are not 1.." + std::to_string(s.size()));
  }
  std::sort(raw.begin(), raw.end());
  return WebDiagram(Trusted{}, std::move(raw), pegs);
}

WebDiagram WebDiagram::validate(std::initializer_list<std::array<int, 4>> raw, std::optional<int> n) {
  std::vector<Edge> edges;
  edges.reserve(raw.size());
  for (const auto& t : raw) edges.push_back({t[0], t[1], t[2], t[3]});
  return validate(std::move(edges), n);
}

WebDiagram make_unchecked(std::vector<Edge> edges, int n) {
  std::sort(edges.begin(), edges.end());
  return WebDiagram(WebDiagram::Trusted{}, std::move(edges), n);
}

std::vector<int> WebDiagram::pegs() const {
  std::vector<int> p(n_, 0);
  for (const Edge& e : edges_) {
    ++p[e.x - 1];
    ++p[e.y - 1];
  }
  return p;
}

int WebDiagram::endpoints_on(int peg) const {
  int count = 0;
  for (const Edge& e : edges_) count += (e.x == peg) + (e.y == peg);
  return count;
}

std::set<int> WebDiagram::peg_set() const {
  std::set<int> s;
  for (const Edge& e : edges_) {
    s.insert(e.x);
    s.insert(e.y);
  }
  return s;
}

std::set<PegPair> WebDiagram::pegpairs_set() const {
  std::set<PegPair> s;
  for (const Edge& e : edges_) s.emplace(e.x, e.y);
  return s;
}

bool WebDiagram::contains(const Edge& e) const {
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

std::size_t WebDiagram::index_of(const Edge& e) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e)
    throw WebError(ErrorKind::EdgeNotInDiagram, webworld::to_string(e));
  return static_cast<std::size_t>(it - edges_.begin());
}

std::string WebDiagram::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (i) out += ',';
    out += webworld::to_string(edges_[i]);
  }
  return out + "}";
}

std::size_t WebDiagramHash::operator()(const WebDiagram& d) const noexcept {
  std::size_t h = static_cast<std::size_t>(d.peg_count()) * 0x9e3779b97f4a7c15ULL;
  for (const Edge& e : d.edges()) {
    for (int v : {e.x, e.y, e.a, e.b}) {
      h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
  }
  return h;
}

WebDiagram sum(const WebDiagram& bottom, const WebDiagram& top) {
  const int n = std::max(bottom.peg_count(), top.peg_count());
  std::vector<int> offset = bottom.pegs();
  offset.resize(n, 0);
  std::vector<Edge> edges = bottom.edges();
  edges.reserve(bottom.size() + top.size());
  for (const Edge& e : top.edges())
    edges.push_back({e.x, e.y, e.a + offset[e.x - 1], e.b + offset[e.y - 1]});
  return make_unchecked(std::move(edges), n);
}

WebDiagram rel(const WebDiagram& d, std::span<const Edge> subset) {
  for (const Edge& e : subset)
    if (!d.contains(e)) throw WebError(ErrorKind::EdgeNotInDiagram, webworld::to_string(e));

  // Old heights present on each peg, compressed to ranks.
  std::vector<std::vector<int>> heights(d.peg_count() + 1);
  for (const Edge& e : subset) {
    heights[e.x].push_back(e.a);
    heights[e.y].push_back(e.b);
  }
  for (auto& h : heights) std::sort(h.begin(), h.end());
  auto rank = [&](int peg, int h) {
    const auto& v = heights[peg];
    return static_cast<int>(std::lower_bound(v.begin(), v.end(), h) - v.begin()) + 1;
  };
  std::vector<Edge> out;
  out.reserve(subset.size());
  for (const Edge& e : subset) out.push_back({e.x, e.y, rank(e.x, e.a), rank(e.y, e.b)});
  return make_unchecked(std::move(out), d.peg_count());
}

PegPermutationFamily PegPermutationFamily::identity(const WebDiagram& d) {
  PegPermutationFamily fam;
  for (int p : d.pegs()) {
    std::vector<int> id(p);
    for (int j = 0; j < p; ++j) id[j] = j + 1;
    fam.perms.push_back(std::move(id));
  }
  return fam;
}

PegPermutationFamily PegPermutationFamily::compose(const PegPermutationFamily& outer,
                                                   const PegPermutationFamily& inner) {
  if (outer.perms.size() != inner.perms.size())
    throw WebError(ErrorKind::ArityMismatch, "families act on different peg counts");
  PegPermutationFamily out;
  for (std::size_t i = 0; i < outer.perms.size(); ++i) {
    const auto& o = outer.perms[i];
    const auto& in = inner.perms[i];
    if (o.size() != in.size()) throw WebError(ErrorKind::ArityMismatch, "peg sizes differ");
    std::vector<int> c(in.size());
    for (std::size_t j = 0; j < in.size(); ++j) c[j] = o[in[j] - 1];
    out.perms.push_back(std::move(c));
  }
  return out;
}

WebDiagram apply_permutations(const WebDiagram& d, const PegPermutationFamily& fam) {
  const auto pegs = d.pegs();
  if (fam.perms.size() != pegs.size())
    throw WebError(ErrorKind::ArityMismatch, "family has " + std::to_string(fam.perms.size()) +
                                                 " permutations for " + std::to_string(pegs.size()) + " pegs");
  for (std::size_t i = 0; i < pegs.size(); ++i) {
    const auto& p = fam.perms[i];
    if (static_cast<int>(p.size()) != pegs[i])
      throw WebError(ErrorKind::ArityMismatch, "permutation for peg " + std::to_string(i + 1) +
                                                   " has wrong length");
    std::vector<bool> seen(p.size() + 1, false);
    for (int v : p) {
      if (v < 1 || v > static_cast<int>(p.size()) || seen[v])
        throw WebError(ErrorKind::ArityMismatch, "not a permutation on peg " + std::to_string(i + 1));
      seen[v] = true;
    }
  }
  std::vector<Edge> out;
  out.reserve(d.size());
  for (const Edge& e : d.edges())
    out.push_back({e.x, e.y, fam.perms[e.x - 1][e.a - 1], fam.perms[e.y - 1][e.b - 1]});
  return make_unchecked(std::move(out), d.peg_count());
}

}  // namespace webworld
