#include "webworld/cases.hpp"
#include "webworld/error.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

namespace webworld {

namespace {

void check_permutation(const Permutation& p) {
  std::vector<bool> seen(p.size() + 1, false);
  for (int v : p) {
    if (v < 1 || v > static_cast<int>(p.size()) || seen[v])
      throw WebError(ErrorKind::BadRange, "not a permutation of 1.." + std::to_string(p.size()));
    seen[v] = true;
  }
}

void check_signs(const SignCode& s) {
  for (int v : s)
    if (v != 1 && v != -1) throw WebError(ErrorKind::BadRange, "sign code entries must be +1 or -1");
}

}  // namespace

// ---- Case 1 ----

WebDiagram case1_diagram(const Permutation& pi) {
  check_permutation(pi);
  const int n = static_cast<int>(pi.size());
  std::vector<Edge> edges;
  for (int i = 1; i <= n; ++i) edges.push_back({pi[i - 1], n + 1, 1, i});
  return WebDiagram::validate(std::move(edges), n + 1);
}

Permutation case1_decode(const WebDiagram& d) {
  const int n = d.peg_count() - 1;
  if (n < 1 || static_cast<int>(d.size()) != n)
    throw WebError(ErrorKind::DimensionMismatch, "not a Case 1 diagram");
  Permutation pi(n, 0);
  for (const Edge& e : d.edges()) {
    if (e.y != n + 1 || e.a != 1) throw WebError(ErrorKind::DimensionMismatch, "not a Case 1 diagram");
    pi[e.b - 1] = e.x;
  }
  return pi;
}

WebWorld case1_world(int n) {
  if (n < 1) throw WebError(ErrorKind::BadRange, "Case 1 needs n >= 1");
  Permutation id(n);
  std::iota(id.begin(), id.end(), 1);
  return web_world(case1_diagram(id));
}

Permutation alpha(std::span<const int> colours) {
  Permutation a(colours.size());
  std::iota(a.begin(), a.end(), 1);
  std::stable_sort(a.begin(), a.end(), [&](int l, int r) { return colours[l - 1] < colours[r - 1]; });
  return a;
}

Permutation compose(const Permutation& outer, const Permutation& inner) {
  if (outer.size() != inner.size()) throw WebError(ErrorKind::DimensionMismatch, "permutation lengths differ");
  Permutation out(inner.size());
  for (std::size_t i = 0; i < inner.size(); ++i) out[i] = outer[inner[i] - 1];
  return out;
}

MinimalColouring minimal(const Permutation& pi, const Permutation& sigma) {
  check_permutation(pi);
  check_permutation(sigma);
  if (pi.size() != sigma.size()) throw WebError(ErrorKind::DimensionMismatch, "permutation lengths differ");
  const std::size_t n = pi.size();
  MinimalColouring out;
  out.by_position.assign(n, 0);
  out.by_letter.assign(n, 0);
  std::size_t next = 0;
  while (next < n) {
    std::vector<int> block;
    ++out.passes;
    for (std::size_t j = 0; j < n && next < n; ++j) {
      if (pi[j] != sigma[next]) continue;
      block.push_back(pi[j]);
      out.by_position[j] = out.passes;
      out.by_letter[pi[j] - 1] = out.passes;
      ++next;
    }
    out.blocks.push_back(std::move(block));
  }
  return out;
}

BigInt case1_f(const Permutation& pi, const Permutation& sigma, int k) {
  const int n = static_cast<int>(pi.size());
  const int m = minimal(pi, sigma).passes;
  return binomial(n - m, k - m);
}

EntryPair case1_entries(const Permutation& pi, const Permutation& sigma) {
  const int n = static_cast<int>(pi.size());
  const int m = minimal(pi, sigma).passes;
  EntryPair e;
  e.colouring = IntPolynomial::monomial(m) * IntPolynomial::one_plus_x_pow(n - m);
  e.mixing = BigRational(m % 2 ? 1 : -1) / BigRational(n * binomial(n - 1, m - 1));
  return e;
}

EntryPair case1_traces(int n) {
  if (n < 1) throw WebError(ErrorKind::BadRange, "Case 1 needs n >= 1");
  EntryPair t;
  t.colouring = IntPolynomial::monomial(1, factorial(n)) * IntPolynomial::one_plus_x_pow(n - 1);
  t.mixing = BigRational(factorial(n - 1));
  return t;
}

// ---- Cases 2 and 3 ----

WebDiagram case2_diagram(const SignCode& pi) {
  check_signs(pi);
  const int n = static_cast<int>(pi.size());
  // x[p], y[p]: heights of the right-going and left-coming endpoints on peg p.
  std::vector<int> x(n + 3, 1), y(n + 3, 1);
  for (int i = 1; i <= n; ++i) {
    y[i + 1] = pi[i - 1] == 1 ? 1 : 2;
    x[i + 1] = 3 - y[i + 1];
  }
  std::vector<Edge> edges;
  for (int i = 1; i <= n + 1; ++i) edges.push_back({i, i + 1, x[i], y[i + 1]});
  return WebDiagram::validate(std::move(edges), n + 2);
}

SignCode case2_decode(const WebDiagram& d) {
  const int n = d.peg_count() - 2;
  if (n < 0 || static_cast<int>(d.size()) != n + 1)
    throw WebError(ErrorKind::DimensionMismatch, "not a Case 2 diagram");
  SignCode pi(n);
  for (int i = 1; i <= n; ++i) {
    const Edge& e = d.edges()[i - 1];
    if (e.x != i || e.y != i + 1) throw WebError(ErrorKind::DimensionMismatch, "not a Case 2 diagram");
    pi[i - 1] = e.b == 1 ? 1 : -1;
  }
  return pi;
}

WebWorld case2_world(int n) {
  if (n < 1) throw WebError(ErrorKind::BadRange, "Case 2 needs n >= 1");
  return web_world(case2_diagram(SignCode(n, 1)));
}

std::vector<Edge> case3_edges(const SignCode& pi) {
  check_signs(pi);
  const int n = static_cast<int>(pi.size());
  if (n < 2) throw WebError(ErrorKind::BadRange, "Case 3 needs n >= 2");
  std::vector<int> x(n + 1), y(n + 1);
  for (int j = 1; j <= n; ++j) {
    x[j] = pi[j - 1] == 1 ? 2 : 1;
    y[j] = 3 - x[j];
  }
  std::vector<Edge> edges;
  for (int i = 1; i < n; ++i) edges.push_back({i, i + 1, x[i], y[i + 1]});
  edges.push_back({1, n, y[1], x[n]});
  return edges;
}

WebDiagram case3_diagram(const SignCode& pi) {
  return WebDiagram::validate(case3_edges(pi), static_cast<int>(pi.size()));
}

SignCode case3_decode(std::span<const Edge> labeled) {
  const int n = static_cast<int>(labeled.size());
  if (n < 2) throw WebError(ErrorKind::DimensionMismatch, "Case 3 needs n >= 2 edges");
  SignCode pi(n);
  for (int j = 1; j <= n; ++j) {
    const int xj = j < n ? labeled[j - 1].a : labeled[n - 1].b;
    const int yj = j == 1 ? labeled[n - 1].a : labeled[j - 2].b;
    const int s = xj - yj;
    if (s != 1 && s != -1) throw WebError(ErrorKind::DimensionMismatch, "not a Case 3 diagram");
    pi[j - 1] = s;
  }
  return pi;
}

std::vector<Edge> case3_label(const WebDiagram& d) {
  const int n = d.peg_count();
  if (n < 3 || static_cast<int>(d.size()) != n)
    throw WebError(ErrorKind::DimensionMismatch, "labeling a Case 3 diagram needs n >= 3 pegs and n edges");
  std::vector<Edge> labeled(n);
  std::vector<bool> found(n, false);
  for (const Edge& e : d.edges()) {
    int idx = -1;
    if (e.x == 1 && e.y == n) idx = n - 1;
    else if (e.y == e.x + 1) idx = e.x - 1;
    if (idx < 0 || found[idx]) throw WebError(ErrorKind::DimensionMismatch, "not a Case 3 diagram");
    labeled[idx] = e;
    found[idx] = true;
  }
  return labeled;
}

WebWorld case3_world(int n) { return web_world(case3_diagram(SignCode(n, 1))); }

std::vector<Edge> reconstruct_labeled(std::span<const Edge> edges, std::span<const int> colours) {
  if (edges.size() != colours.size()) throw WebError(ErrorKind::LengthMismatch, "one colour per edge");
  struct Slot {
    int colour, height;
    std::size_t edge;
    bool right;
  };
  int pegs = 0;
  for (const Edge& e : edges) pegs = std::max(pegs, e.y);
  std::vector<std::vector<Slot>> by_peg(pegs + 1);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    by_peg[edges[i].x].push_back({colours[i], edges[i].a, i, false});
    by_peg[edges[i].y].push_back({colours[i], edges[i].b, i, true});
  }
  std::vector<Edge> out(edges.begin(), edges.end());
  for (auto& slots : by_peg) {
    std::sort(slots.begin(), slots.end(), [](const Slot& l, const Slot& r) {
      return std::tie(l.colour, l.height) < std::tie(r.colour, r.height);
    });
    for (std::size_t h = 0; h < slots.size(); ++h) {
      Edge& e = out[slots[h].edge];
      (slots[h].right ? e.b : e.a) = static_cast<int>(h) + 1;
    }
  }
  return out;
}

DEATriple dea(std::span<const int> c, bool cyclic) {
  DEATriple t;
  t.cyclic = cyclic;
  const std::size_t len = c.size();
  const std::size_t positions = cyclic ? len : (len == 0 ? 0 : len - 1);
  for (std::size_t i = 0; i < positions; ++i) {
    const int here = c[i], there = c[(i + 1) % len];
    const int pos = static_cast<int>(i) + 1;
    if (here > there) t.des.push_back(pos);
    else if (here == there) t.equ.push_back(pos);
    else t.asc.push_back(pos);
  }
  return t;
}

YPartition y_partition(const SignCode& pi, const SignCode& sigma) {
  if (pi.size() != sigma.size()) throw WebError(ErrorKind::DimensionMismatch, "sign codes differ in length");
  check_signs(pi);
  check_signs(sigma);
  YPartition y;
  for (std::size_t i = 0; i < pi.size(); ++i) y.y[(5 + 2 * sigma[i] - pi[i]) / 2 - 1].push_back(static_cast<int>(i) + 1);
  return y;
}

namespace {

// 'D', 'E', 'A' per position.
std::string signature(const DEATriple& t, std::size_t positions) {
  std::string s(positions, '?');
  for (int p : t.des) s[p - 1] = 'D';
  for (int p : t.equ) s[p - 1] = 'E';
  for (int p : t.asc) s[p - 1] = 'A';
  return s;
}

std::map<std::string, BigInt> wordeuler_table(int length, int k, bool cyclic) {
  std::map<std::string, BigInt> table;
  if (k < 1 || k > length) return table;
  const std::size_t positions = cyclic ? length : length - 1;
  for_each_surjection(length, k, [&](std::span<const int> c) { ++table[signature(dea(c, cyclic), positions)]; });
  return table;
}

}  // namespace

BigInt wordeuler(int length, int k, const DEATriple& target) {
  const std::size_t positions = target.cyclic ? length : length - 1;
  if (target.des.size() + target.equ.size() + target.asc.size() != positions)
    throw WebError(ErrorKind::DimensionMismatch, "DEA sets must partition the positions");
  const auto table = wordeuler_table(length, k, target.cyclic);
  const auto it = table.find(signature(target, positions));
  return it == table.end() ? BigInt(0) : it->second;
}

BigInt case23_f(const SignCode& pi, const SignCode& sigma, int k, ChainVariant variant) {
  const bool cyclic = variant == ChainVariant::Cyclic;
  const int n = static_cast<int>(pi.size());
  if (static_cast<int>(sigma.size()) != n) throw WebError(ErrorKind::DimensionMismatch, "sign codes differ in length");
  SignCode p = pi, s = sigma;
  if (cyclic) {
    std::rotate(p.begin(), p.begin() + 1, p.end());
    std::rotate(s.begin(), s.begin() + 1, s.end());
  }
  const YPartition y = y_partition(p, s);
  const int length = cyclic ? n : n + 1;
  const auto table = wordeuler_table(length, k, cyclic);
  const auto& y2 = y.y[1];
  const auto& y3 = y.y[2];
  BigInt total = 0;
  std::string sig(n, '?');
  for (int i : y.y[0]) sig[i - 1] = 'D';
  for (int i : y.y[3]) sig[i - 1] = 'A';
  for (unsigned amask = 0; amask < (1U << y2.size()); ++amask)
    for (unsigned bmask = 0; bmask < (1U << y3.size()); ++bmask) {
      // A moves Y2 members to Des, B moves Y3 members to Asc; the rest are plateaus.
      for (std::size_t j = 0; j < y2.size(); ++j) sig[y2[j] - 1] = (amask >> j) & 1U ? 'D' : 'E';
      for (std::size_t j = 0; j < y3.size(); ++j) sig[y3[j] - 1] = (bmask >> j) & 1U ? 'A' : 'E';
      if (auto it = table.find(sig); it != table.end()) total += it->second;
    }
  return total;
}

EntryPair case23_entries(const SignCode& pi, const SignCode& sigma, ChainVariant variant) {
  const int length = static_cast<int>(pi.size()) + (variant == ChainVariant::Linear ? 1 : 0);
  std::vector<BigInt> counts(length + 1, 0);
  for (int k = 1; k <= length; ++k) counts[k] = case23_f(pi, sigma, k, variant);
  EntryPair e;
  for (int k = 1; k <= length; ++k) {
    e.colouring.add_term(k, counts[k]);
    e.mixing += BigRational(counts[k]) * BigRational(BigInt(k % 2 ? 1 : -1), BigInt(k));
  }
  return e;
}

EntryPair case2_traces(int n) {
  if (n < 1) throw WebError(ErrorKind::BadRange, "Case 2 needs n >= 1");
  EntryPair t;
  for (int k = 1; k <= n + 1; ++k)
    t.colouring.add_term(k, factorial(k) * (stirling2(n + 2, k + 1) - stirling2(n + 1, k + 1)));
  t.mixing = 1;
  return t;
}

EntryPair case3_traces(int n) {
  if (n < 1) throw WebError(ErrorKind::BadRange, "Case 3 needs n >= 1");
  EntryPair t;
  t.colouring.add_term(1, 1);
  for (int k = 1; k <= n + 1; ++k) t.colouring.add_term(k, factorial(k) * stirling2(n + 1, k + 1));
  t.mixing = n + 1;
  return t;
}

BigInt case3_labeled_f(const SignCode& pi, const SignCode& sigma, int k) {
  const auto edges = case3_edges(pi);
  const int n = static_cast<int>(edges.size());
  if (static_cast<int>(sigma.size()) != n) throw WebError(ErrorKind::DimensionMismatch, "sign codes differ in length");
  if (k < 1 || k > n) return 0;
  BigInt count = 0;
  for_each_surjection(n, k, [&](std::span<const int> c) {
    if (case3_decode(reconstruct_labeled(edges, c)) == sigma) ++count;
  });
  return count;
}

EntryPair case3_labeled_traces(int n) {
  EntryPair t;
  for (const SignCode& pi : all_sign_codes(n))
    for (int k = 1; k <= n; ++k) {
      const BigInt f = case3_labeled_f(pi, pi, k);
      t.colouring.add_term(k, f);
      t.mixing += BigRational(f) * BigRational(BigInt(k % 2 ? 1 : -1), BigInt(k));
    }
  return t;
}

std::vector<SignCode> all_sign_codes(int n) {
  if (n < 0 || n > 20) throw WebError(ErrorKind::BoundsTooLarge, "sign codes limited to n <= 20");
  std::vector<SignCode> out;
  for (unsigned mask = 0; mask < (1U << n); ++mask) {
    SignCode s(n);
    for (int i = 0; i < n; ++i) s[i] = (mask >> (n - 1 - i)) & 1U ? 1 : -1;
    out.push_back(std::move(s));
  }
  return out;
}

// ---- Colour sequences ----

KeysCounts keys_counts(int n, int k) {
  if (k < 1 || k > n) throw WebError(ErrorKind::BadRange, "keys counts need 1 <= k <= n");
  KeysCounts out;
  const BigInt minus_one = -1;
  for (int i = 0; i <= k; ++i) {
    const BigInt sign = (k - i) % 2 ? -1 : 1;
    const BigInt c = sign * binomial(k, i);
    const BigInt im1 = i - 1;
    out.all += c * i * ipow(im1, n - 1);
    out.neq += c * (ipow(im1, n) + im1 * ipow(minus_one, n));
    out.eq += c * (ipow(im1, n - 1) + im1 * ipow(minus_one, n - 1));
  }
  return out;
}

KeysCounts keys_counts_direct(int n, int k) {
  if (k < 1 || k > n) throw WebError(ErrorKind::BadRange, "keys counts need 1 <= k <= n");
  KeysCounts out;
  for_each_surjection(n, k, [&](std::span<const int> c) {
    for (int i = 0; i + 1 < n; ++i)
      if (c[i] == c[i + 1]) return;
    ++out.all;
    if (c.front() == c.back()) ++out.eq;
    else ++out.neq;
  });
  return out;
}

KeyDecomposition key_decomposition(std::span<const int> c) {
  KeyDecomposition d;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i > 0 && c[i] == c[i - 1]) d.a.push_back(static_cast<int>(i) + 1);
    else d.w.push_back(c[i]);
  }
  return d;
}

std::vector<int> key_compose(const KeyDecomposition& d, int length) {
  if (static_cast<int>(d.w.size() + d.a.size()) != length)
    throw WebError(ErrorKind::LengthMismatch, "|w| + |A| must equal the length");
  std::vector<int> c;
  std::size_t wi = 0, ai = 0;
  for (int pos = 1; pos <= length; ++pos) {
    if (ai < d.a.size() && d.a[ai] == pos) {
      if (c.empty()) throw WebError(ErrorKind::BadRange, "position 1 cannot repeat");
      c.push_back(c.back());
      ++ai;
    } else {
      c.push_back(d.w.at(wi++));
    }
  }
  return c;
}

BigRational stirling_lemma_lhs(int n, int k) {
  BigInt sum = 0;
  for (int i = 0; i <= k; ++i) {
    const BigInt term = binomial(k, i) * ipow(BigInt(i + 1), n);
    if ((k - i) % 2) sum -= term;
    else sum += term;
  }
  return BigRational(sum, factorial(k));
}

}  // namespace webworld
