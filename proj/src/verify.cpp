#include "webworld/verify.hpp"

#include "webworld/cases.hpp"
#include "webworld/enumeration.hpp"
#include "webworld/error.hpp"
#include "webworld/matrices.hpp"
#include "webworld/posets.hpp"
#include "webworld/transitive.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace webworld {

bool Report::ok() const {
  return std::all_of(lines.begin(), lines.end(), [](const CheckLine& l) { return l.ok; });
}

void Report::add(bool ok, std::string name, std::string detail) {
  lines.push_back({ok, std::move(name), std::move(detail)});
}

void Report::append(const Report& other) { lines.insert(lines.end(), other.lines.begin(), other.lines.end()); }

std::string Report::to_text() const {
  std::ostringstream os;
  for (const auto& l : lines) os << (l.ok ? "PASS " : "FAIL ") << l.name << ": " << l.detail << '\n';
  return os.str();
}

namespace {

// Counts checks of one property and remembers the first failure.
struct Tally {
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::string first_failure;

  void record(bool ok, const std::string& where) {
    ++checked;
    if (!ok && failed++ == 0) first_failure = where;
  }
  void report(Report& r, const std::string& name, const std::string& unit) const {
    std::string detail = std::to_string(checked) + " " + unit + " checked";
    if (failed) detail += ", " + std::to_string(failed) + " failed; first: " + first_failure;
    r.add(failed == 0 && checked > 0, name, detail);
  }
};

std::string matrix_string(const RepresentMatrix& a) {
  std::string s = "[";
  for (int i = 1; i <= a.size(); ++i) {
    s += i > 1 ? ",[" : "[";
    for (int j = 1; j <= a.size(); ++j) s += (j > 1 ? "," : "") + std::to_string(a(i, j));
    s += "]";
  }
  return s + "]";
}

std::string codes_string(const std::vector<int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

// Connected once isolated pegs are ignored.
bool edges_connected(const RepresentMatrix& a) {
  std::vector<int> parent(a.size() + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (int i = 1; i <= a.size(); ++i)
    for (int j = i + 1; j <= a.size(); ++j)
      if (a(i, j)) parent[find(i)] = find(j);
  int roots = 0;
  for (int i = 1; i <= a.size(); ++i) roots += a.hook(i) > 0 && find(i) == i;
  return roots == 1;
}

}  // namespace

Report verify_mixing_laws(int max_pegs, int max_edges) {
  // Zero row sums need at least two edges (a lone edge has R = [1]), and a
  // positive trace needs the edges to be connected (otherwise R = 0).
  Tally zero_rows, single_edge, idempotent, trace_rank, disconnected, bell_rows, integral;
  for_each_world({.max_pegs = max_pegs, .max_edges = max_edges, .min_pegs = 2, .min_edges = 1}, WorldFilter::All,
                 [&](const RepresentMatrix& a) {
                   const WebWorld w = web_world(diagram_from_represent(a));
                   const auto m = colouring_matrix(w);
                   const auto r = mixing_matrix(m);
                   const std::string where = matrix_string(a);
                   const auto rs = row_sums(r);
                   const BigRational expect_row = a.total() == 1 ? 1 : 0;
                   (a.total() == 1 ? single_edge : zero_rows)
                       .record(std::all_of(rs.begin(), rs.end(), [&](const BigRational& v) { return v == expect_row; }),
                               where);
                   const auto bell = ordered_bell_polynomial(static_cast<unsigned>(w.edge_count()));
                   const auto ms = row_sums(m);
                   bell_rows.record(std::all_of(ms.begin(), ms.end(), [&](const IntPolynomial& p) { return p == bell; }),
                                    where);
                   idempotent.record(is_idempotent(r), where);
                   const BigRational t = trace(r);
                   const std::size_t rk = rank(r);
                   if (edges_connected(a))
                     trace_rank.record(denominator(t) == 1 && t > 0 && t == BigRational(rk), where);
                   else
                     disconnected.record(t == 0 && rk == 0, where);
                   bool eq1 = true;
                   for (std::size_t i = 0; i < w.size() && eq1; ++i)
                     for (std::size_t j = 0; j < w.size() && eq1; ++j)
                       eq1 = mixing_from_polynomial(m(i, j)) == r(i, j);
                   integral.record(eq1, where);
                 });
  Report rep;
  zero_rows.report(rep, "R row sums are zero (two or more edges)", "worlds");
  single_edge.report(rep, "one-edge worlds have R = [1]", "worlds");
  idempotent.report(rep, "R is idempotent", "worlds");
  trace_rank.report(rep, "trace(R) = rank(R) positive integer (connected edges)", "worlds");
  disconnected.report(rep, "R = 0 when the edges are disconnected", "worlds");
  bell_rows.report(rep, "M row sums are ordered Bell polynomials", "worlds");
  integral.report(rep, "R equals -integral of M(-x)/x", "worlds");
  return rep;
}

Report verify_diagonals(int max_pegs, int max_edges) {
  Tally diag, traces;
  std::size_t repeated = 0;
  for_each_world({.max_pegs = max_pegs, .max_edges = max_edges, .min_pegs = 2, .min_edges = 1}, WorldFilter::All,
                 [&](const RepresentMatrix& a) {
                   const WebWorld w = web_world(diagram_from_represent(a));
                   bool all_distinct = true;
                   for (const auto& d : w.diagrams()) {
                     const auto p = decomposition_poset(d);
                     if (!p.has_distinct_blocks()) {
                       all_distinct = false;
                       ++repeated;
                       continue;
                     }
                     const auto counts = f_counts(d, d);
                     IntPolynomial brute;
                     for (std::size_t l = 1; l < counts.size(); ++l) brute.add_term(l, counts[l]);
                     diag.record(diag_colouring_poly(p) == brute && diag_mixing(p) == mixing_from_counts(counts),
                                 d.to_string());
                   }
                   const auto g = web_graph(a);
                   const bool unit = std::all_of(g.labels.begin(), g.labels.end(),
                                                 [](const auto& kv) { return kv.second == 1; });
                   if (unit && all_distinct) {
                     const TracePair tp = trace_via_posets(w);
                     traces.record(tp.colouring == colouring_trace(w) && tp.mixing == mixing_trace(w), matrix_string(a));
                   }
                 });
  Report rep;
  diag.report(rep, "descent formulas match diagonal entries", "diagrams");
  traces.report(rep, "poset traces match brute-force traces", "worlds");
  rep.add(true, "repeated-block diagrams skipped", std::to_string(repeated));
  return rep;
}

Report verify_counting(int max_edges) {
  Report rep;
  Tally orbit;
  for_each_world({.max_pegs = 2 * max_edges, .max_edges = max_edges, .min_pegs = 2, .min_edges = 1},
                 WorldFilter::NoIsolatedPegs, [&](const RepresentMatrix& a) {
                   orbit.record(world_size(a) == BigInt(web_world(diagram_from_represent(a)).size()), matrix_string(a));
                 });
  orbit.report(rep, "world size formula equals orbit size", "worlds");

  Tally nww_t, nwwnip_t, npww_t;
  for (int m = 2; m <= 5; ++m)
    for (int t = 0; t <= 6; ++t)
      for (int n = 0; n <= 6; ++n) {
        const std::string where = "(" + std::to_string(m) + "," + std::to_string(t) + "," + std::to_string(n) + ")";
        nww_t.record(nww(m, t, n) == nww_series_coefficient(m, t, n), where);
        if (t >= 1 && n >= 1) nwwnip_t.record(nwwnip(m, t, n) == nwwnip_direct(m, t, n), where);
      }
  const auto table = npww_table(6, 6, 5);
  for (int m = 1; m <= 6; ++m)
    for (int t = 1; t <= 6; ++t)
      for (int n = 1; n <= 5; ++n)
        npww_t.record(table[m][t][n] == npww_direct(m, t, n),
                      "(" + std::to_string(m) + "," + std::to_string(t) + "," + std::to_string(n) + ")");
  nww_t.report(rep, "nww series equals direct count", "triples");
  nwwnip_t.report(rep, "nwwnip closed form equals direct count", "triples");
  npww_t.report(rep, "npww series equals direct count", "triples");

  const auto census = edge_census(3);
  rep.add(census.size() == 30, "three-edge census", std::to_string(census.size()) + " worlds (expected 30)");
  return rep;
}

Report verify_case1(int n) {
  Report rep;
  const WebWorld w = case1_world(n);
  const auto m = colouring_matrix(w);
  const auto r = mixing_matrix(m);
  Tally entries, eulerian_rows, lemma;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const Permutation pi = case1_decode(w[i]);
    std::vector<int> by_class(n + 1, 0);
    for (std::size_t j = 0; j < w.size(); ++j) {
      const Permutation sigma = case1_decode(w[j]);
      const EntryPair e = case1_entries(pi, sigma);
      entries.record(e.colouring == m(i, j) && e.mixing == r(i, j), codes_string(pi) + "->" + codes_string(sigma));
      ++by_class[minimal(pi, sigma).passes];
    }
    bool ok = true;
    for (int k = 1; k <= n; ++k) ok = ok && BigInt(by_class[k]) == eulerian(n, k);
    eulerian_rows.record(ok, codes_string(pi));
    for (int k = 1; k <= n; ++k)
      for_each_surjection(n, k, [&](std::span<const int> canonical) {
        // Canonical edge order of D_pi is by letter; alpha reads colours by position.
        std::vector<int> by_position(n);
        for (int p = 0; p < n; ++p) by_position[p] = canonical[pi[p] - 1];
        const WebDiagram got = reconstruct(w[i], Colouring::from_assignment({canonical.begin(), canonical.end()}));
        lemma.record(got == case1_diagram(compose(pi, alpha(by_position))), codes_string(pi));
      });
  }
  entries.report(rep, "case1 closed-form entries", "entries");
  eulerian_rows.report(rep, "case1 Eulerian multiplicities", "rows");
  lemma.report(rep, "case1 reconstruction is pi o alpha_c", "colourings");
  const EntryPair closed = case1_traces(n);
  const BigRational tr = trace(r);
  rep.add(closed.mixing == tr, "case1 trace(R)",
          "(n-1)! = " + to_string(closed.mixing) + (closed.mixing == tr ? " matches" : " differs from") +
              " brute trace " + to_string(tr));
  const IntPolynomial tm = trace(m);
  rep.add(closed.colouring == tm, "case1 trace(M)", closed.colouring.to_string() + " vs brute " + tm.to_string());
  return rep;
}

Report verify_case2(int n) {
  Report rep;
  const WebWorld w = case2_world(n);
  rep.add(w.size() == (std::size_t{1} << n), "case2 world size", std::to_string(w.size()));
  const auto m = colouring_matrix(w);
  const auto r = mixing_matrix(m);
  Tally f;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const SignCode pi = case2_decode(w[i]);
    for (std::size_t j = 0; j < w.size(); ++j) {
      const SignCode sigma = case2_decode(w[j]);
      const auto counts = f_counts(w[i], w[j]);
      bool ok = true;
      for (int k = 1; k <= n + 1; ++k) ok = ok && case23_f(pi, sigma, k, ChainVariant::Linear) == counts[k];
      f.record(ok, codes_string(pi) + "->" + codes_string(sigma));
    }
  }
  f.report(rep, "case2 Y-partition f equals brute force", "pairs");
  const EntryPair closed = case2_traces(n);
  const BigRational tr = trace(r);
  rep.add(tr == closed.mixing, "case2 trace(R)", "brute " + to_string(tr) + ", closed form " + to_string(closed.mixing));
  const IntPolynomial tm = trace(m);
  rep.add(tm == closed.colouring, "case2 trace(M)", "brute " + tm.to_string() + ", closed form " + closed.colouring.to_string());
  return rep;
}

Report verify_case3(int n) {
  Report rep;
  const auto codes = all_sign_codes(n);
  Tally f;
  for (const auto& pi : codes)
    for (const auto& sigma : codes) {
      bool ok = true;
      for (int k = 1; k <= n; ++k)
        ok = ok && case23_f(pi, sigma, k, ChainVariant::Cyclic) == case3_labeled_f(pi, sigma, k);
      f.record(ok, codes_string(pi) + "->" + codes_string(sigma));
    }
  f.report(rep, "case3 Y-partition f equals labeled brute force", "pairs");
  const EntryPair closed = case3_traces(n);
  const EntryPair labeled = case3_labeled_traces(n);
  rep.add(labeled.mixing == closed.mixing, "case3 trace(R)",
          "labeled brute " + to_string(labeled.mixing) + ", closed form " + to_string(closed.mixing));
  rep.add(labeled.colouring == closed.colouring, "case3 trace(M)",
          "labeled brute " + labeled.colouring.to_string() + ", closed form " + closed.colouring.to_string());
  if (n >= 3) {
    // Without parallel edges the unlabeled world is faithful too.
    const WebWorld w = case3_world(n);
    const auto m = colouring_matrix(w);
    const auto r = mixing_matrix(m);
    Tally g;
    for (std::size_t i = 0; i < w.size(); ++i)
      for (std::size_t j = 0; j < w.size(); ++j) {
        const SignCode pi = case3_decode(case3_label(w[i]));
        const SignCode sigma = case3_decode(case3_label(w[j]));
        const auto counts = f_counts(w[i], w[j]);
        bool ok = true;
        for (int k = 1; k <= n; ++k) ok = ok && case23_f(pi, sigma, k, ChainVariant::Cyclic) == counts[k];
        g.record(ok, codes_string(pi) + "->" + codes_string(sigma));
      }
    g.report(rep, "case3 Y-partition f equals world brute force", "pairs");
    rep.add(trace(r) == closed.mixing && trace(m) == closed.colouring, "case3 world traces",
            "brute " + to_string(trace(r)) + " and " + trace(m).to_string());
  }
  return rep;
}

Report verify_keys(int max_n) {
  Report rep;
  Tally keys, split;
  for (int n = 1; n <= max_n; ++n)
    for (int k = 1; k <= n; ++k) {
      const KeysCounts f = keys_counts(n, k);
      const std::string where = "(" + std::to_string(n) + "," + std::to_string(k) + ")";
      keys.record(f == keys_counts_direct(n, k), where);
      split.record(f.all == f.eq + f.neq, where);
    }
  keys.report(rep, "keys formulas equal direct enumeration", "(n,k) pairs");
  split.report(rep, "keys split into equal and unequal ends", "(n,k) pairs");
  Tally lemma;
  for (int n = 0; n <= 10; ++n)
    for (int k = 0; k <= n; ++k)
      lemma.record(stirling_lemma_lhs(n, k) == BigRational(stirling2(n + 1, k + 1)),
                   "(" + std::to_string(n) + "," + std::to_string(k) + ")");
  lemma.report(rep, "alternating sum of (i+1)^n gives S(n+1,k+1)", "(n,k) pairs");
  return rep;
}

Report verify_transitive() {
  Report rep;
  const std::vector<RepresentMatrix> expected = {
      RepresentMatrix::from_rows({{0, 3}, {0, 0}}),
      RepresentMatrix::from_rows({{0, 2, 0}, {0, 0, 1}, {0, 0, 0}}),
      RepresentMatrix::from_rows({{0, 1, 1}, {0, 0, 1}, {0, 0, 0}}),
      RepresentMatrix::from_rows({{0, 1, 0}, {0, 0, 2}, {0, 0, 0}}),
      RepresentMatrix::from_rows({{0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {0, 0, 0, 0}}),
  };
  auto got = transitive_worlds(3);
  auto want = expected;
  std::sort(got.begin(), got.end());
  std::sort(want.begin(), want.end());
  rep.add(got == want, "three-edge transitive worlds", std::to_string(got.size()) + " found (expected the 5 listed)");
  bool round_trip = true;
  for (int t = 1; t <= 5; ++t)
    for (const auto& a : transitive_worlds(t)) round_trip = round_trip && reattach(core_matrix(a)) == a;
  rep.add(round_trip, "core matrix round trip", "edges 1..5");
  bool chains = true;
  for (int n = 1; n <= 5; ++n) chains = chains && is_transitive(represent(case2_world(n)));
  for (int n = 3; n <= 5; ++n) chains = chains && is_transitive(represent(case3_world(n)));
  rep.add(chains, "case 2 and case 3 worlds are transitive", "n <= 5");
  return rep;
}

}  // namespace webworld
