// One PASS/FAIL line per acceptance criterion. Exit status is nonzero when
// any criterion fails.

#include "webworld/cases.hpp"
#include "webworld/colouring.hpp"
#include "webworld/enumeration.hpp"
#include "webworld/matrices.hpp"
#include "webworld/posets.hpp"
#include "webworld/transitive.hpp"
#include "webworld/verify.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>

using namespace webworld;

namespace {

struct Outcome {
  bool ok = false;
  std::string detail;
};

int failures = 0;

void criterion(int id, double limit_s, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool in_time = s < limit_s;
  const bool ok = o.ok && in_time;
  failures += !ok;
  std::ostringstream line;
  line.precision(3);
  line << std::fixed << (ok ? "PASS" : "FAIL") << " criterion " << id << ": " << o.detail << " [" << s << " s, limit "
       << limit_s << " s" << (in_time ? "" : ", too slow") << "]";
  std::cout << line.str() << std::endl;
}

Outcome from_reports(const std::vector<Report>& reports) {
  Outcome o{true, ""};
  std::size_t lines = 0;
  for (const auto& r : reports)
    for (const auto& l : r.lines) {
      ++lines;
      if (!l.ok) {
        o.ok = false;
        o.detail += (o.detail.empty() ? "" : "; ") + l.name + ": " + l.detail;
      }
    }
  if (o.ok) o.detail = std::to_string(lines) + " checks hold";
  return o;
}

Outcome falkirk() {
  const WebWorld w = web_world(WebDiagram::validate({{1, 2, 1, 1}, {2, 3, 2, 1}, {3, 4, 2, 1}}));
  const auto m = colouring_matrix(w);
  const auto r = mixing_matrix(m);
  std::map<std::string, std::size_t> posets;
  posets[Poset::chain(3).isomorphism_key()] = 2;
  posets[Poset::from_relations(3, {{1, 2}, {1, 3}}).isomorphism_key()] = 1;
  posets[Poset::from_relations(3, {{1, 3}, {2, 3}}).isomorphism_key()] = 1;
  const bool ok = w.size() == 4 && trace(m) == IntPolynomial{0, 4, 10, 6} && trace(r) == 1 && poset_census(w) == posets;
  return {ok, "|W| = " + std::to_string(w.size()) + ", trace(M) = " + trace(m).to_string() +
                  ", trace(R) = " + to_string(trace(r)) + ", posets {3-chain x2, vee, wedge} " +
                  (poset_census(w) == posets ? "match" : "differ")};
}

Outcome vee_diagram() {
  // Falkirk member whose middle edge lies below both neighbours: three
  // distinct blocks with E1 < E2, E1 < E3.
  const auto d = WebDiagram::validate({{1, 2, 1, 2}, {2, 3, 1, 1}, {3, 4, 2, 1}});
  const auto p = decomposition_poset(d);
  const IntPolynomial want{0, 1, 3, 2};
  const BigRational sixth(1, 6);
  const auto brute_m = colouring_entry(d, d);
  const auto brute_r = mixing_entry(d, d);
  const auto eq_m = diag_colouring_poly(p);
  const auto eq_r = diag_mixing(p);
  const bool ok = p.size() == 3 && p.has_distinct_blocks() && p.order == Poset::from_relations(3, {{1, 2}, {1, 3}}) &&
                  brute_m == want && eq_m == want && brute_r == sixth && eq_r == sixth;
  return {ok, "brute " + brute_m.to_string() + " / " + to_string(brute_r) + ", descent formulas " + eq_m.to_string() +
                  " / " + to_string(eq_r)};
}

Outcome mixing_laws() {
  std::size_t worlds = 0, row_fail = 0, idem_fail = 0, trace_fail = 0, bell_fail = 0;
  std::size_t one_edge = 0, disconnected = 0, unexplained = 0;
  for_each_world({.max_pegs = 5, .max_edges = 5, .min_pegs = 2, .min_edges = 1}, WorldFilter::All,
                 [&](const RepresentMatrix& a) {
                   ++worlds;
                   const WebWorld w = web_world(diagram_from_represent(a));
                   const auto m = colouring_matrix(w);
                   const auto r = mixing_matrix(m);
                   const auto rs = row_sums(r);
                   const bool rows_zero = std::all_of(rs.begin(), rs.end(), [](const BigRational& v) { return v == 0; });
                   const bool idem = is_idempotent(r);
                   const BigRational t = trace(r);
                   const bool tr = denominator(t) == 1 && t > 0 && t == BigRational(rank(r));
                   const auto bell = ordered_bell_polynomial(static_cast<unsigned>(a.total()));
                   const auto ms = row_sums(m);
                   const bool bells = std::all_of(ms.begin(), ms.end(), [&](const IntPolynomial& p) { return p == bell; });
                   row_fail += !rows_zero;
                   idem_fail += !idem;
                   trace_fail += !tr;
                   bell_fail += !bells;
                   // Expected exceptions: one edge gives R = [1]; disconnected
                   // edges give R = 0.
                   const bool single = a.total() == 1 && rs.size() == 1 && rs[0] == 1;
                   const bool zero = t == 0 && rank(r) == 0 && rows_zero;
                   one_edge += single;
                   disconnected += zero;
                   unexplained += (!rows_zero || !tr) && !single && !zero;
                 });
  const bool ok = row_fail == 0 && idem_fail == 0 && trace_fail == 0 && bell_fail == 0;
  std::ostringstream s;
  s << worlds << " worlds; R^2 = R fails on " << idem_fail << ", M row sums = ordered Bell fail on " << bell_fail
    << "; zero R row sums fail on " << row_fail << " and positive trace(R) = rank(R) fails on " << trace_fail
    << " (" << one_edge << " one-edge worlds with R = [1], " << disconnected
    << " disconnected worlds with R = 0, " << unexplained << " other)";
  return {ok, s.str()};
}

Outcome case1() {
  std::vector<Report> reps;
  for (int n = 2; n <= 4; ++n) reps.push_back(verify_case1(n));
  return from_reports(reps);
}

Outcome case2() {
  std::vector<Report> reps;
  for (int n = 1; n <= 3; ++n) reps.push_back(verify_case2(n));
  return from_reports(reps);
}

Outcome case3() {
  std::vector<Report> reps;
  for (int n = 2; n <= 3; ++n) reps.push_back(verify_case3(n));
  reps.push_back(verify_keys(6));
  return from_reports(reps);
}

Outcome counting() {
  const std::vector<Report> reps{verify_counting(4), verify_transitive()};
  Outcome o = from_reports(reps);
  if (o.ok) {
    const auto census = edge_census(3);
    const auto transitive = std::count_if(census.begin(), census.end(),
                                          [](const RepresentMatrix& a) { return is_transitive(a); });
    o.ok = census.size() == 30 && transitive == 5;
    o.detail += "; census " + std::to_string(census.size()) + " worlds, " + std::to_string(transitive) + " transitive";
  }
  return o;
}

Outcome figure1() {
  const auto d = WebDiagram::validate({{1, 2, 1, 1}, {1, 7, 2, 2}, {2, 4, 2, 3}, {3, 4, 1, 1}, {3, 6, 2, 4},
                                       {4, 6, 2, 3}, {4, 6, 4, 2}, {5, 6, 1, 1}, {5, 7, 2, 1}});
  const std::vector<std::vector<int>> expected{{0, 1, 0, 0, 0, 0, 1}, {0, 0, 0, 1, 0, 0, 0}, {0, 0, 0, 1, 0, 1, 0},
                                            {0, 0, 0, 0, 0, 2, 0}, {0, 0, 0, 0, 0, 1, 1}, {0, 0, 0, 0, 0, 0, 0},
                                            {0, 0, 0, 0, 0, 0, 0}};
  const bool pegs = d.pegs() == std::vector<int>{2, 2, 2, 4, 2, 4, 2};
  const auto a = represent(d);
  const BigInt size = world_size(a);
  const auto blocks = decompose(d);
  const std::vector<Edge> e4{{2, 4, 2, 3}, {4, 6, 2, 3}, {4, 6, 4, 2}};
  const bool has_e4 = std::any_of(blocks.begin(), blocks.end(), [&](const Block& b) { return b.edges == e4; });
  std::vector<int> colour(d.size());
  for (const auto& b : blocks)
    for (const Edge& e : b.edges) colour[d.index_of(e)] = b.label;
  const bool self = reconstruct(d, Colouring::from_assignment(colour)) == d;
  const bool ok = pegs && a.rows() == expected && size == 9216 && blocks.size() == 7 && has_e4 && self;
  std::ostringstream s;
  s << "Pegs " << (pegs ? "(2,2,2,4,2,4,2)" : "differ") << ", Represent " << (a.rows() == expected ? "matches" : "differs")
    << ", world_size " << size << ", " << blocks.size() << " blocks" << (has_e4 ? " incl. E_4" : "")
    << ", block colouring " << (self ? "self-reconstructing" : "not self-reconstructing");
  return {ok, s.str()};
}

}  // namespace

int main() {
  criterion(1, 1, falkirk);
  criterion(2, 1, vee_diagram);
  criterion(3, 300, mixing_laws);
  criterion(4, 120, case1);
  criterion(5, 120, case2);
  criterion(6, 180, case3);
  criterion(7, 300, counting);
  criterion(8, 10, figure1);
  return failures ? 1 : 0;
}
