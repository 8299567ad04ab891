#pragma once

// Cross-validation suites: closed forms and identities checked against the
// brute-force colouring pipeline. Each suite returns one line per property.

#include <string>
#include <vector>

namespace webworld {

struct CheckLine {
  bool ok = false;
  std::string name;
  std::string detail;
};

struct Report {
  std::vector<CheckLine> lines;

  bool ok() const;
  void add(bool ok, std::string name, std::string detail);
  void append(const Report& other);
  /// "PASS name: detail" per line.
  std::string to_text() const;
};

/// Zero R row sums, R^2 = R, trace(R) = rank(R) > 0, M row sums equal the
/// ordered Bell polynomial, and the integral form of R, over every world with
/// at most max_pegs pegs and 1..max_edges edges.
Report verify_mixing_laws(int max_pegs, int max_edges);
/// Descent formulas for diagonal entries equal brute force on every diagram
/// with distinct blocks in the same range of worlds; poset traces agree
/// wherever the web graph has unit labels.
Report verify_diagonals(int max_pegs, int max_edges);
/// Orbit sizes, nww, nwwnip and npww against direct enumeration, and the
/// three-edge census.
Report verify_counting(int max_edges);
Report verify_case1(int n);
Report verify_case2(int n);
Report verify_case3(int n);
Report verify_keys(int max_n);
Report verify_transitive();

}  // namespace webworld
