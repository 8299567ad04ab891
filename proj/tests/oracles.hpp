#pragma once

// Slow, deliberately naive reference implementations. They share no code
// with the library beyond the Edge struct and big-number types, so a test
// comparing the two is a real cross-check.

#include "webworld/arith.hpp"
#include "webworld/diagram.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using webworld::BigInt;
using webworld::BigRational;
using webworld::Edge;
using Edges = std::vector<Edge>;

inline std::vector<int> peg_counts(const Edges& d, int n) {
  std::vector<int> p(n + 1, 0);
  for (const Edge& e : d) {
    ++p[e.x];
    ++p[e.y];
  }
  return p;
}

inline Edges sorted(Edges d) {
  std::sort(d.begin(), d.end());
  return d;
}

/// Orbit as a literal product of symmetric groups: every tuple of per-peg
/// permutations is applied and the results collected in a set.
inline std::set<Edges> orbit(const Edges& d, int n) {
  const auto p = peg_counts(d, n);
  std::vector<std::vector<int>> perm(n + 1);
  for (int i = 1; i <= n; ++i) {
    perm[i].resize(p[i]);
    std::iota(perm[i].begin(), perm[i].end(), 1);
  }
  std::set<Edges> out;
  while (true) {
    Edges img;
    for (const Edge& e : d) img.push_back({e.x, e.y, perm[e.x][e.a - 1], perm[e.y][e.b - 1]});
    out.insert(sorted(img));
    int i = 1;
    while (i <= n && !std::next_permutation(perm[i].begin(), perm[i].end())) ++i;
    if (i > n) break;
  }
  return out;
}

/// rel(X) ⊕ rel(Y) ⊕ ... by hand: compress heights per colour class, then
/// stack the classes in colour order.
inline Edges reconstruct(const Edges& d, int n, const std::vector<int>& colour, int colours) {
  std::vector<int> offset(n + 1, 0);
  Edges out;
  for (int k = 1; k <= colours; ++k) {
    std::map<int, std::vector<int>> heights;
    for (std::size_t i = 0; i < d.size(); ++i)
      if (colour[i] == k) {
        heights[d[i].x].push_back(d[i].a);
        heights[d[i].y].push_back(d[i].b);
      }
    for (auto& [peg, hs] : heights) std::sort(hs.begin(), hs.end());
    auto rank = [&](int peg, int h) {
      const auto& hs = heights[peg];
      return static_cast<int>(std::lower_bound(hs.begin(), hs.end(), h) - hs.begin()) + 1;
    };
    for (std::size_t i = 0; i < d.size(); ++i)
      if (colour[i] == k)
        out.push_back({d[i].x, d[i].y, offset[d[i].x] + rank(d[i].x, d[i].a), offset[d[i].y] + rank(d[i].y, d[i].b)});
    for (auto& [peg, hs] : heights) offset[peg] += static_cast<int>(hs.size());
  }
  return sorted(out);
}

/// Calls visit with every function [L] -> [l] (not only surjections).
inline void for_each_function(int length, int l, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> c(length, 1);
  while (true) {
    visit(c);
    int i = 0;
    while (i < length && c[i] == l) c[i++] = 1;
    if (i == length) return;
    ++c[i];
  }
}

inline bool surjective(const std::vector<int>& c, int l) {
  std::vector<bool> seen(l + 1, false);
  for (int v : c) seen[v] = true;
  return std::count(seen.begin() + 1, seen.end(), true) == l;
}

/// f(D1, D2, l) over all l^L functions; d1 must be sorted (canonical order).
inline BigInt f(const Edges& d1, const Edges& d2, int n, int l) {
  BigInt count = 0;
  const Edges target = sorted(d2);
  if (d1.empty()) return l == 0 && target.empty() ? 1 : 0;
  for_each_function(static_cast<int>(d1.size()), l, [&](const std::vector<int>& c) {
    if (surjective(c, l) && reconstruct(d1, n, c, l) == target) ++count;
  });
  return count;
}

inline BigRational mixing(const Edges& d1, const Edges& d2, int n) {
  BigRational r = 0;
  for (int l = 1; l <= static_cast<int>(d1.size()); ++l)
    r += BigRational(f(d1, d2, n, l)) * BigRational(l % 2 ? 1 : -1, l);
  return r;
}

/// Coefficients of sum_l x^l f(D1, D2, l), index = degree.
inline std::vector<BigInt> colouring(const Edges& d1, const Edges& d2, int n) {
  std::vector<BigInt> c(d1.size() + 1, 0);
  for (int l = 1; l <= static_cast<int>(d1.size()); ++l) c[l] = f(d1, d2, n, l);
  while (!c.empty() && c.back() == 0) c.pop_back();
  return c;
}

/// Surjections [m] -> [l] counted over all functions.
inline BigInt surjections(int m, int l) {
  BigInt count = 0;
  if (m == 0 || l == 0) return m == l ? 1 : 0;
  for_each_function(m, l, [&](const std::vector<int>& c) { count += surjective(c, l) ? 1 : 0; });
  return count;
}

/// A poset as a strict "less than" predicate on 1..k.
struct Order {
  int k = 0;
  std::vector<std::pair<int, int>> less;  // transitive pairs need not be listed

  bool lt(int i, int j) const {
    // DFS over the given pairs.
    std::vector<bool> seen(k + 1, false);
    std::vector<int> stack{i};
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (auto [a, b] : less)
        if (a == u && !seen[b]) {
          if (b == j) return true;
          seen[b] = true;
          stack.push_back(b);
        }
    }
    return false;
  }
};

/// Every permutation of 1..k, kept when no later element is below an
/// earlier one.
inline std::vector<std::vector<int>> linear_extensions(const Order& p) {
  std::vector<int> perm(p.k);
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<std::vector<int>> out;
  do {
    bool ok = true;
    for (int i = 0; i < p.k && ok; ++i)
      for (int j = i + 1; j < p.k && ok; ++j)
        if (p.lt(perm[j], perm[i])) ok = false;
    if (ok) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

/// Order-preserving maps to [m] (weakly increasing along the order).
inline BigInt order_preserving(const Order& p, int m, bool surjective_only) {
  BigInt count = 0;
  if (p.k == 0) return surjective_only ? (m == 0 ? 1 : 0) : 1;
  if (m == 0) return 0;
  for_each_function(p.k, m, [&](const std::vector<int>& c) {
    for (int i = 1; i <= p.k; ++i)
      for (int j = 1; j <= p.k; ++j)
        if (p.lt(i, j) && c[i - 1] > c[j - 1]) return;
    if (!surjective_only || surjective(c, m)) ++count;
  });
  return count;
}

/// Rank by textbook Gaussian elimination over the rationals.
inline std::size_t rank(std::vector<std::vector<BigRational>> a) {
  std::size_t r = 0;
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    for (std::size_t i = 0; i < rows; ++i)
      if (i != r && a[i][c] != 0) {
        const BigRational factor = a[i][c] / a[r][c];
        for (std::size_t j = c; j < cols; ++j) a[i][j] -= factor * a[r][j];
      }
    ++r;
  }
  return r;
}

/// Strictly upper-triangular m x m matrices with entry sum t, by recursion
/// over the cells in row-major order.
inline void for_each_matrix(int m, int t, const std::function<void(const std::vector<std::vector<int>>&)>& visit) {
  std::vector<std::pair<int, int>> cells;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) cells.emplace_back(i, j);
  std::vector<std::vector<int>> a(m, std::vector<int>(m, 0));
  std::function<void(std::size_t, int)> rec = [&](std::size_t idx, int left) {
    if (idx == cells.size()) {
      if (left == 0) visit(a);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      a[cells[idx].first][cells[idx].second] = v;
      rec(idx + 1, left - v);
    }
    a[cells[idx].first][cells[idx].second] = 0;
  };
  rec(0, t);
}

inline int nonzero(const std::vector<std::vector<int>>& a) {
  int c = 0;
  for (const auto& r : a)
    for (int v : r) c += v != 0;
  return c;
}

inline bool isolated_peg(const std::vector<std::vector<int>>& a) {
  const int m = static_cast<int>(a.size());
  for (int i = 0; i < m; ++i) {
    int hook = 0;
    for (int j = 0; j < m; ++j) hook += a[i][j] + a[j][i];
    if (hook == 0) return true;
  }
  return false;
}

inline bool connected(const std::vector<std::vector<int>>& a) {
  const int m = static_cast<int>(a.size());
  if (m == 0) return true;
  std::vector<bool> seen(m, false);
  std::vector<int> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (int v = 0; v < m; ++v)
      if (!seen[v] && (a[u][v] || a[v][u])) {
        seen[v] = true;
        stack.push_back(v);
      }
  }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

/// Transitive in the chain sense: peg 1 emits, peg m receives, interior pegs
/// do both.
inline bool transitive(const std::vector<std::vector<int>>& a) {
  const int m = static_cast<int>(a.size());
  for (int i = 0; i < m; ++i) {
    int out = 0, in = 0;
    for (int j = 0; j < m; ++j) {
      out += a[i][j];
      in += a[j][i];
    }
    if (i < m - 1 && out == 0) return false;
    if (i > 0 && in == 0) return false;
  }
  return true;
}

}  // namespace oracle
