#include "webworld/posets.hpp"
#include "webworld/error.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>

namespace webworld {

Poset Poset::from_relations(int k, const std::vector<std::pair<int, int>>& pairs) {
  Poset p;
  p.k_ = k;
  p.rel_.assign(static_cast<std::size_t>(k) * k, false);
  for (int i = 0; i < k; ++i) p.rel_[i * k + i] = true;
  for (auto [lo, hi] : pairs) {
    if (lo < 1 || hi < 1 || lo > k || hi > k)
      throw WebError(ErrorKind::InvalidMatrix, "relation outside 1.." + std::to_string(k));
    p.rel_[(lo - 1) * k + (hi - 1)] = true;
  }
  for (int m = 0; m < k; ++m)
    for (int i = 0; i < k; ++i)
      if (p.rel_[i * k + m])
        for (int j = 0; j < k; ++j)
          if (p.rel_[m * k + j]) p.rel_[i * k + j] = true;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (p.rel_[i * k + j] && p.rel_[j * k + i])
        throw WebError(ErrorKind::InvalidMatrix, "relations contain a cycle");
  return p;
}

Poset Poset::chain(int k) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i < k; ++i) pairs.emplace_back(i, i + 1);
  return from_relations(k, pairs);
}

Poset Poset::antichain(int k) { return from_relations(k, {}); }

std::vector<std::pair<int, int>> Poset::covers() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= k_; ++i)
    for (int j = 1; j <= k_; ++j) {
      if (!less(i, j)) continue;
      bool covered = true;
      for (int m = 1; m <= k_ && covered; ++m)
        if (less(i, m) && less(m, j)) covered = false;
      if (covered) out.emplace_back(i, j);
    }
  return out;
}

bool Poset::is_naturally_labeled() const {
  for (int i = 1; i <= k_; ++i)
    for (int j = 1; j <= k_; ++j)
      if (less(i, j) && i > j) return false;
  return true;
}

bool Poset::is_partial_order() const {
  for (int i = 1; i <= k_; ++i) {
    if (!leq(i, i)) return false;
    for (int j = 1; j <= k_; ++j) {
      if (i != j && leq(i, j) && leq(j, i)) return false;
      for (int m = 1; m <= k_; ++m)
        if (leq(i, j) && leq(j, m) && !leq(i, m)) return false;
    }
  }
  return true;
}

std::string Poset::isomorphism_key() const {
  if (k_ > 8) throw WebError(ErrorKind::BoundsTooLarge, "isomorphism key needs k <= 8");
  std::vector<int> perm(k_);
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  do {
    std::string key(static_cast<std::size_t>(k_) * k_, '0');
    for (int i = 0; i < k_; ++i)
      for (int j = 0; j < k_; ++j)
        if (rel_[perm[i] * k_ + perm[j]]) key[i * k_ + j] = '1';
    if (best.empty() || key < best) best = std::move(key);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::to_string(k_) + ":" + best;
}

bool DecompositionPoset::has_distinct_blocks() const {
  std::set<WebDiagram> seen;
  for (const auto& b : blocks)
    if (!seen.insert(b.normalized).second) return false;
  return true;
}

namespace {

// reach[i * L + j]: edge j is reachable from edge i along "below" arcs.
std::vector<bool> below_closure(const WebDiagram& d) {
  const std::size_t n = d.size();
  std::vector<bool> reach(n * n, false);
  std::vector<std::vector<std::pair<int, std::size_t>>> on_peg(d.peg_count() + 1);
  for (std::size_t i = 0; i < n; ++i) {
    const Edge& e = d.edges()[i];
    on_peg[e.x].emplace_back(e.a, i);
    on_peg[e.y].emplace_back(e.b, i);
  }
  for (auto& eps : on_peg) {
    for (const auto& [h1, i] : eps)
      for (const auto& [h2, j] : eps)
        if (h1 < h2 && i != j) reach[i * n + j] = true;
  }
  for (std::size_t i = 0; i < n; ++i) reach[i * n + i] = true;
  for (std::size_t m = 0; m < n; ++m)
    for (std::size_t i = 0; i < n; ++i)
      if (reach[i * n + m])
        for (std::size_t j = 0; j < n; ++j)
          if (reach[m * n + j]) reach[i * n + j] = true;
  return reach;
}

struct RawDecomposition {
  std::vector<std::vector<std::size_t>> members;  // edge indices per block, in label order
  std::vector<std::pair<int, int>> arcs;          // 1-based block labels, lower -> upper
};

RawDecomposition raw_decompose(const WebDiagram& d) {
  const std::size_t n = d.size();
  const auto reach = below_closure(d);

  std::vector<int> comp(n, -1);
  std::vector<std::vector<std::size_t>> comps;
  for (std::size_t i = 0; i < n; ++i) {
    if (comp[i] >= 0) continue;
    comps.emplace_back();
    for (std::size_t j = i; j < n; ++j)
      if (reach[i * n + j] && reach[j * n + i]) {
        comp[j] = static_cast<int>(comps.size()) - 1;
        comps.back().push_back(j);
      }
  }
  const std::size_t k = comps.size();

  // Direct below-arcs between components.
  std::vector<std::set<int>> succ(k);
  std::vector<int> indegree(k, 0);
  std::vector<std::vector<std::pair<int, std::size_t>>> on_peg(d.peg_count() + 1);
  for (std::size_t i = 0; i < n; ++i) {
    const Edge& e = d.edges()[i];
    on_peg[e.x].emplace_back(e.a, i);
    on_peg[e.y].emplace_back(e.b, i);
  }
  for (const auto& eps : on_peg)
    for (const auto& [h1, i] : eps)
      for (const auto& [h2, j] : eps)
        if (h1 < h2 && comp[i] != comp[j] && succ[comp[i]].insert(comp[j]).second) ++indegree[comp[j]];

  // Smallest (peg, height) endpoint of each component is its tie-break key.
  std::vector<std::pair<int, int>> key(k, {1 << 30, 1 << 30});
  for (std::size_t i = 0; i < n; ++i) {
    const Edge& e = d.edges()[i];
    auto& kk = key[comp[i]];
    kk = std::min({kk, std::pair{e.x, e.a}, std::pair{e.y, e.b}});
  }

  using Item = std::pair<std::pair<int, int>, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> ready;
  for (std::size_t c = 0; c < k; ++c)
    if (indegree[c] == 0) ready.push({key[c], static_cast<int>(c)});
  std::vector<int> label(k, 0);
  RawDecomposition out;
  while (!ready.empty()) {
    const int c = ready.top().second;
    ready.pop();
    out.members.push_back(comps[c]);
    label[c] = static_cast<int>(out.members.size());
    for (int s : succ[c])
      if (--indegree[s] == 0) ready.push({key[s], s});
  }
  for (std::size_t c = 0; c < k; ++c)
    for (int s : succ[c]) out.arcs.emplace_back(label[c], label[s]);
  return out;
}

}  // namespace

std::vector<Block> decompose(const WebDiagram& d) {
  const RawDecomposition raw = raw_decompose(d);
  std::vector<Block> blocks;
  for (const auto& members : raw.members) {
    Block b;
    for (std::size_t i : members) b.edges.push_back(d.edges()[i]);
    b.normalized = rel(d, b.edges);
    b.label = static_cast<int>(blocks.size()) + 1;
    blocks.push_back(std::move(b));
  }
  return blocks;
}

DecompositionPoset decomposition_poset(const WebDiagram& d) {
  const RawDecomposition raw = raw_decompose(d);
  DecompositionPoset p;
  for (const auto& members : raw.members) {
    Block b;
    for (std::size_t i : members) b.edges.push_back(d.edges()[i]);
    b.normalized = rel(d, b.edges);
    b.label = static_cast<int>(p.blocks.size()) + 1;
    p.blocks.push_back(std::move(b));
  }
  p.order = Poset::from_relations(static_cast<int>(p.blocks.size()), raw.arcs);
  return p;
}

std::vector<LinearExtension> linear_extensions(const Poset& p) {
  const int k = p.size();
  std::vector<LinearExtension> out;
  LinearExtension current;
  std::vector<bool> used(k + 1, false);
  // Backtrack: at each step place any unused element all of whose strict
  // predecessors are already placed.
  auto recurse = [&](auto&& self) -> void {
    if (static_cast<int>(current.size()) == k) {
      out.push_back(current);
      return;
    }
    for (int e = 1; e <= k; ++e) {
      if (used[e]) continue;
      bool minimal = true;
      for (int f = 1; f <= k && minimal; ++f)
        if (!used[f] && p.less(f, e)) minimal = false;
      if (!minimal) continue;
      used[e] = true;
      current.push_back(e);
      self(self);
      current.pop_back();
      used[e] = false;
    }
  };
  recurse(recurse);
  return out;
}

int descents(const LinearExtension& le) {
  int d = 0;
  for (std::size_t i = 0; i + 1 < le.size(); ++i) d += le[i] > le[i + 1];
  return d;
}

BigInt omega(const Poset& p, unsigned m) {
  // [x^m] of x^(1+des) / (1-x)^(p+1) is C(m - 1 - des + p, p).
  const int k = p.size();
  if (k == 0) return 1;
  BigInt total = 0;
  for (const auto& le : linear_extensions(p)) {
    const std::int64_t d = descents(le);
    total += binomial(static_cast<std::int64_t>(m) - 1 - d + k, k);
  }
  return total;
}

BigInt theta(const Poset& p, unsigned m) {
  BigInt total = 0;
  for (unsigned j = 0; j <= m; ++j) {
    BigInt term = binomial(m, j) * (j == 0 && p.size() > 0 ? BigInt(0) : omega(p, j));
    if ((m - j) % 2) total -= term;
    else total += term;
  }
  return total;
}

namespace {

template <class Accept>
BigInt count_maps(const Poset& p, unsigned m, Accept accept) {
  const int k = p.size();
  if (k > 8) throw WebError(ErrorKind::BoundsTooLarge, "direct map enumeration needs |P| <= 8");
  if (m == 0) return k == 0 ? 1 : 0;
  std::vector<unsigned> f(k, 1);
  BigInt count = 0;
  for (;;) {
    bool preserving = true;
    for (int i = 1; i <= k && preserving; ++i)
      for (int j = 1; j <= k && preserving; ++j)
        if (p.leq(i, j) && f[i - 1] > f[j - 1]) preserving = false;
    if (preserving && accept(f)) ++count;
    int pos = 0;
    while (pos < k && f[pos] == m) f[pos++] = 1;
    if (pos == k) break;
    ++f[pos];
  }
  return count;
}

}  // namespace

BigInt omega_direct(const Poset& p, unsigned m) {
  return count_maps(p, m, [](const std::vector<unsigned>&) { return true; });
}

BigInt theta_direct(const Poset& p, unsigned m) {
  return count_maps(p, m, [m](const std::vector<unsigned>& f) {
    std::vector<bool> hit(m + 1, false);
    for (unsigned v : f) hit[v] = true;
    for (unsigned v = 1; v <= m; ++v)
      if (!hit[v]) return false;
    return true;
  });
}

IntPolynomial descent_colouring_poly(const Poset& p) {
  const int k = p.size();
  IntPolynomial total;
  for (const auto& le : linear_extensions(p)) {
    const int d = descents(le);
    total += IntPolynomial::monomial(1 + d) * IntPolynomial::one_plus_x_pow(k - 1 - d);
  }
  return total;
}

BigRational descent_mixing(const Poset& p) {
  const int k = p.size();
  BigRational total = 0;
  for (const auto& le : linear_extensions(p)) {
    const int d = descents(le);
    BigRational term(BigInt(1), k * binomial(k - 1, d));
    if (d % 2) total -= term;
    else total += term;
  }
  return total;
}

IntPolynomial diag_colouring_poly(const DecompositionPoset& p) {
  if (!p.has_distinct_blocks())
    throw WebError(ErrorKind::RepeatedBlocks, "decomposition repeats an indecomposable block");
  return descent_colouring_poly(p.order);
}

BigRational diag_mixing(const DecompositionPoset& p) {
  if (!p.has_distinct_blocks())
    throw WebError(ErrorKind::RepeatedBlocks, "decomposition repeats an indecomposable block");
  return descent_mixing(p.order);
}

namespace {

void require_unit_labels(const WebWorld& w) {
  if (w.size() == 0) return;
  const auto& edges = w[0].edges();
  for (std::size_t i = 1; i < edges.size(); ++i)
    if (edges[i].x == edges[i - 1].x && edges[i].y == edges[i - 1].y)
      throw WebError(ErrorKind::LabelNotOne, "pegs " + std::to_string(edges[i].x) + " and " +
                                                 std::to_string(edges[i].y) + " share several edges");
}

}  // namespace

TracePair trace_via_posets(const WebWorld& w) {
  require_unit_labels(w);
  // Group diagrams by (labeled) poset so each Jordan-Hölder set is walked once.
  std::map<Poset, std::size_t> multiplicity;
  for (const auto& d : w.diagrams()) {
    const auto p = decomposition_poset(d);
    if (!p.has_distinct_blocks())
      throw WebError(ErrorKind::RepeatedBlocks, d.to_string() + " repeats a block");
    ++multiplicity[p.order];
  }
  TracePair t{IntPolynomial{}, BigRational(0)};
  for (const auto& [poset, mult] : multiplicity) {
    t.colouring += descent_colouring_poly(poset) * BigInt(mult);
    t.mixing += descent_mixing(poset) * BigRational(BigInt(mult));
  }
  return t;
}

std::map<std::string, std::size_t> poset_census(const WebWorld& w) {
  std::map<Poset, std::size_t> labeled;
  for (const auto& d : w.diagrams()) ++labeled[decomposition_poset(d).order];
  std::map<std::string, std::size_t> out;
  for (const auto& [poset, mult] : labeled) out[poset.isomorphism_key()] += mult;
  return out;
}

}  // namespace webworld
