#include "webworld/enumeration.hpp"
#include "webworld/error.hpp"
#include "webworld/series.hpp"
#include "webworld/transitive.hpp"

#include <algorithm>
#include <numeric>

namespace webworld {

RepresentMatrix RepresentMatrix::zero(int pegs) {
  if (pegs < 0) throw WebError(ErrorKind::InvalidMatrix, "negative size");
  RepresentMatrix a;
  a.m_ = pegs;
  a.a_.assign(static_cast<std::size_t>(pegs) * pegs, 0);
  return a;
}

RepresentMatrix RepresentMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
  const int m = static_cast<int>(rows.size());
  RepresentMatrix a = zero(m);
  for (int i = 0; i < m; ++i) {
    if (static_cast<int>(rows[i].size()) != m) throw WebError(ErrorKind::InvalidMatrix, "matrix is not square");
    for (int j = 0; j < m; ++j) {
      const int v = rows[i][j];
      if (v < 0) throw WebError(ErrorKind::InvalidMatrix, "negative entry");
      if (j <= i && v != 0) throw WebError(ErrorKind::InvalidMatrix, "entry on or below the diagonal");
      a.a_[i * m + j] = v;
    }
  }
  return a;
}

void RepresentMatrix::set(int i, int j, int value) {
  if (i < 1 || j <= i || j > m_ || value < 0)
    throw WebError(ErrorKind::InvalidMatrix, "entry outside the strict upper triangle");
  a_[(i - 1) * m_ + (j - 1)] = value;
}

std::vector<std::vector<int>> RepresentMatrix::rows() const {
  std::vector<std::vector<int>> out(m_);
  for (int i = 0; i < m_; ++i) out[i].assign(a_.begin() + i * m_, a_.begin() + (i + 1) * m_);
  return out;
}

int RepresentMatrix::total() const { return std::accumulate(a_.begin(), a_.end(), 0); }

int RepresentMatrix::nonzero_count() const {
  return static_cast<int>(std::count_if(a_.begin(), a_.end(), [](int v) { return v != 0; }));
}

int RepresentMatrix::row_sum(int i) const {
  int s = 0;
  for (int j = 1; j <= m_; ++j) s += (*this)(i, j);
  return s;
}

int RepresentMatrix::column_sum(int j) const {
  int s = 0;
  for (int i = 1; i <= m_; ++i) s += (*this)(i, j);
  return s;
}

bool RepresentMatrix::has_isolated_peg() const {
  for (int i = 1; i <= m_; ++i)
    if (hook(i) == 0) return true;
  return false;
}

RepresentMatrix represent(const WebDiagram& d) {
  RepresentMatrix a = RepresentMatrix::zero(d.peg_count());
  for (const Edge& e : d.edges()) a.set(e.x, e.y, a(e.x, e.y) + 1);
  return a;
}

RepresentMatrix represent(const WebWorld& w) {
  if (w.size() == 0) return {};
  return represent(w[0]);
}

WDMatrix wdm(const WebDiagram& d) {
  WDMatrix out;
  out.n = d.peg_count();
  out.cells.resize(static_cast<std::size_t>(out.n) * out.n);
  for (const Edge& e : d.edges()) out.cells[(e.x - 1) * out.n + (e.y - 1)].emplace_back(e.a, e.b);
  for (auto& cell : out.cells) std::sort(cell.begin(), cell.end());
  return out;
}

WebGraph web_graph(const RepresentMatrix& a) {
  WebGraph g;
  g.vertices = a.size();
  for (int i = 1; i <= a.size(); ++i)
    for (int j = i + 1; j <= a.size(); ++j)
      if (a(i, j)) g.labels[{i, j}] = a(i, j);
  return g;
}

WebGraph web_graph(const WebWorld& w) { return web_graph(represent(w)); }

bool is_proper(const RepresentMatrix& a) {
  const int m = a.size();
  if (m == 0) return false;
  std::vector<int> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  int components = m;
  for (int i = 1; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j)
      if (a(i, j)) {
        const int ri = find(i - 1), rj = find(j - 1);
        if (ri != rj) {
          parent[ri] = rj;
          --components;
        }
      }
  return components == 1;
}

bool is_proper(const WebWorld& w) { return is_proper(represent(w)); }

WebDiagram diagram_from_represent(const RepresentMatrix& a) {
  std::vector<int> next(a.size() + 1, 0);
  std::vector<Edge> edges;
  for (int i = 1; i <= a.size(); ++i)
    for (int j = i + 1; j <= a.size(); ++j)
      for (int k = 0; k < a(i, j); ++k) edges.push_back({i, j, ++next[i], ++next[j]});
  return WebDiagram::validate(std::move(edges), a.size());
}

BigInt world_size(const RepresentMatrix& a) {
  BigInt num = 1, den = 1;
  for (int i = 1; i <= a.size(); ++i) {
    num *= factorial(a.hook(i));
    for (int j = i + 1; j <= a.size(); ++j) den *= factorial(a(i, j));
  }
  return num / den;
}

namespace {

// Calls visit for every strictly upper-triangular m x m matrix with entry sum
// exactly t, cells filled in row-major order, lexicographically.
void for_each_with_total(int m, int t, const std::function<void(const RepresentMatrix&)>& visit) {
  std::vector<std::pair<int, int>> cells;
  for (int i = 1; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j) cells.emplace_back(i, j);
  RepresentMatrix a = RepresentMatrix::zero(m);
  if (cells.empty()) {
    if (t == 0) visit(a);
    return;
  }
  std::function<void(std::size_t, int)> fill = [&](std::size_t idx, int left) {
    const auto [i, j] = cells[idx];
    if (idx + 1 == cells.size()) {
      a.set(i, j, left);
      visit(a);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      a.set(i, j, v);
      fill(idx + 1, left - v);
    }
    a.set(i, j, 0);
  };
  fill(0, t);
}

BigInt count_matrices(int m, int t, const std::function<bool(const RepresentMatrix&)>& keep) {
  BigInt n = 0;
  for_each_with_total(m, t, [&](const RepresentMatrix& a) {
    if (keep(a)) ++n;
  });
  return n;
}

}  // namespace

BigInt nww(int m, int t, int n) {
  if (m < 2 || t < 0 || n < 0) return 0;
  return count_matrices(m, t, [n](const RepresentMatrix& a) { return a.nonzero_count() == n; });
}

BigInt nww_series_coefficient(int m, int t, int n) {
  if (m < 2 || t < 0 || n < 0) return 0;
  // [z^t y^n] (1 + y z / (1 - z))^C(m,2); variables are (z, y).
  const std::vector<int> orders{t, n};
  const auto z = TruncatedSeries::variable(orders, 0);
  const auto y = TruncatedSeries::variable(orders, 1);
  const auto base = TruncatedSeries::constant(orders, 1) + y * z * TruncatedSeries::geometric(orders, 0);
  const auto power = base.pow(static_cast<unsigned>(m * (m - 1) / 2));
  const std::vector<int> e{t, n};
  return numerator(power.coefficient(e));
}

BigInt nwwnip(int a, int b, int c) {
  if (a < 2 || b < 1 || c < 1) return 0;
  BigInt sum = 0;
  for (int k = 0; k <= a; ++k) {
    BigInt term = binomial(a, k) * binomial(static_cast<std::int64_t>(k) * (k - 1) / 2, c);
    if ((a - k) % 2) sum -= term;
    else sum += term;
  }
  return binomial(b - 1, c - 1) * sum;
}

BigInt nwwnip_direct(int a, int b, int c) {
  if (a < 2 || b < 1 || c < 1) return 0;
  return count_matrices(a, b, [c](const RepresentMatrix& m) {
    return m.nonzero_count() == c && !m.has_isolated_peg();
  });
}

std::vector<std::vector<std::vector<BigInt>>> npww_table(int max_edges, int max_pairs, int max_pegs) {
  if (max_edges < 0 || max_pairs < 0 || max_pegs < 0)
    throw WebError(ErrorKind::SeriesTruncationTooSmall, "truncation orders must be non-negative");
  // Variables (x, q, z): x marks edges, q peg pairs, z pegs.
  const std::vector<int> orders{max_edges, max_pairs, max_pegs};
  const auto one = TruncatedSeries::constant(orders, 1);
  const auto x = TruncatedSeries::variable(orders, 0);
  const auto q = TruncatedSeries::variable(orders, 1);
  const auto z = TruncatedSeries::variable(orders, 2);
  const auto base = one + q * x * TruncatedSeries::geometric(orders, 0);
  TruncatedSeries egf(orders);
  TruncatedSeries z_pow = one;
  for (int n = 1; n <= max_pegs; ++n) {
    z_pow = z_pow * z;
    const BigRational inv_fact(BigInt(1), factorial(n));
    egf += base.pow(static_cast<unsigned>(n * (n - 1) / 2)) * z_pow * inv_fact;
  }
  const auto connected = egf.log1p();
  std::vector<std::vector<std::vector<BigInt>>> table(
      max_edges + 1, std::vector<std::vector<BigInt>>(max_pairs + 1, std::vector<BigInt>(max_pegs + 1)));
  std::vector<int> e(3);
  for (int m = 0; m <= max_edges; ++m)
    for (int t = 0; t <= max_pairs; ++t)
      for (int n = 0; n <= max_pegs; ++n) {
        e = {m, t, n};
        const BigRational v = connected.coefficient(e) * BigRational(factorial(n));
        if (denominator(v) != 1) throw WebError(ErrorKind::InvalidMatrix, "non-integral proper-world count");
        table[m][t][n] = numerator(v);
      }
  return table;
}

BigInt npww(int m, int t, int n) {
  if (m < 0 || t < 0 || n < 0) return 0;
  return npww_table(m, t, n)[m][t][n];
}

BigInt npww_direct(int m, int t, int n) {
  if (m < 0 || t < 0 || n < 1) return 0;
  return count_matrices(n, m, [t](const RepresentMatrix& a) { return a.nonzero_count() == t && is_proper(a); });
}

bool passes(const RepresentMatrix& a, WorldFilter filter) {
  switch (filter) {
    case WorldFilter::All:
      return true;
    case WorldFilter::NoIsolatedPegs:
      return !a.has_isolated_peg();
    case WorldFilter::Proper:
      return is_proper(a);
    case WorldFilter::Transitive:
      return a.size() >= 2 && !a.has_isolated_peg() && is_transitive(a);
  }
  return false;
}

void for_each_world(const EnumerationBounds& bounds, WorldFilter filter,
                    const std::function<void(const RepresentMatrix&)>& visit) {
  constexpr double kLimit = 1e7;
  double estimate = 0;
  for (int m = bounds.min_pegs; m <= bounds.max_pegs; ++m)
    for (int t = bounds.min_edges; t <= bounds.max_edges; ++t) {
      const int cells = m * (m - 1) / 2;
      estimate += cells == 0 ? 1.0 : binomial(t + cells - 1, t).convert_to<double>();
      if (estimate > kLimit)
        throw WebError(ErrorKind::BoundsTooLarge, "enumeration would exceed ten million matrices");
    }
  for (int m = bounds.min_pegs; m <= bounds.max_pegs; ++m)
    for (int t = bounds.min_edges; t <= bounds.max_edges; ++t)
      for_each_with_total(m, t, [&](const RepresentMatrix& a) {
        if (passes(a, filter)) visit(a);
      });
}

std::vector<RepresentMatrix> enumerate_worlds(int max_pegs, int max_edges, WorldFilter filter) {
  std::vector<RepresentMatrix> out;
  for_each_world({.max_pegs = max_pegs, .max_edges = max_edges}, filter,
                 [&](const RepresentMatrix& a) { out.push_back(a); });
  return out;
}

std::vector<RepresentMatrix> edge_census(int t) {
  std::vector<RepresentMatrix> out;
  for_each_world({.max_pegs = t + 1, .max_edges = t, .min_pegs = 2, .min_edges = t}, WorldFilter::NoIsolatedPegs,
                 [&](const RepresentMatrix& a) { out.push_back(a); });
  return out;
}

}  // namespace webworld
