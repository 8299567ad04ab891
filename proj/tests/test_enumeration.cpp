#include "oracles.hpp"

#include "webworld/enumeration.hpp"
#include "webworld/error.hpp"
#include "webworld/series.hpp"

#include <doctest.h>

using namespace webworld;

namespace {

const WebDiagram kFigure1 = WebDiagram::validate({{1, 2, 1, 1}, {1, 7, 2, 2}, {2, 4, 2, 3}, {3, 4, 1, 1}, {3, 6, 2, 4},
                                                  {4, 6, 2, 3}, {4, 6, 4, 2}, {5, 6, 1, 1}, {5, 7, 2, 1}});

const std::vector<std::vector<int>> kFigure1Represent{
    {0, 1, 0, 0, 0, 0, 1}, {0, 0, 0, 1, 0, 0, 0}, {0, 0, 0, 1, 0, 1, 0}, {0, 0, 0, 0, 0, 2, 0},
    {0, 0, 0, 0, 0, 1, 1}, {0, 0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0, 0}};

// Matrices on m pegs with t edges over n pairs, via the naive recursion.
BigInt count_matrices(int m, int t, const std::function<bool(const std::vector<std::vector<int>>&)>& keep) {
  BigInt c = 0;
  oracle::for_each_matrix(m, t, [&](const auto& a) { c += keep(a) ? 1 : 0; });
  return c;
}

}  // namespace

TEST_CASE("represent") {
  CHECK(represent(kFigure1).rows() == kFigure1Represent);
  const auto single = represent(WebDiagram::validate({{1, 2, 1, 1}}));
  CHECK(single.rows() == std::vector<std::vector<int>>{{0, 1}, {0, 0}});
  CHECK(is_proper(single));
  CHECK_FALSE(is_proper(represent(WebDiagram::validate({{1, 2, 1, 1}, {3, 4, 1, 1}}))));
  const auto a = represent(kFigure1);
  CHECK(a.total() == 9);
  CHECK(a.nonzero_count() == 8);
  CHECK(a.hook(4) == 4);
  CHECK_THROWS_AS(RepresentMatrix::from_rows({{0, 0}, {1, 0}}), WebError);
}

TEST_CASE("wdm and web graph") {
  const auto m = wdm(kFigure1);
  CHECK(m.at(4, 6) == std::vector<std::pair<int, int>>{{2, 3}, {4, 2}});
  CHECK(m.at(1, 3).empty());
  const auto g = web_graph(represent(kFigure1));
  CHECK(g.vertices == 7);
  CHECK(g.labels.at({4, 6}) == 2);
  CHECK(g.labels.size() == 8);
}

TEST_CASE("world size") {
  CHECK(world_size(RepresentMatrix::from_rows({{0, 2}, {0, 0}})) == 2);
  CHECK(world_size(RepresentMatrix::from_rows({{0, 1}, {0, 0}})) == 1);
  CHECK(world_size(RepresentMatrix::from_rows(kFigure1Represent)) == 9216);
  CHECK(diagram_from_represent(RepresentMatrix::from_rows(kFigure1Represent)).pegs() == kFigure1.pegs());
}

TEST_CASE("world size equals orbit size for every world up to four edges") {
  for (const auto& a : enumerate_worlds(5, 4, WorldFilter::NoIsolatedPegs)) {
    if (a.total() == 0) continue;
    const WebDiagram d = diagram_from_represent(a);
    CHECK(represent(d) == a);
    CHECK(world_size(a) == oracle::orbit(d.edges(), d.peg_count()).size());
  }
}

TEST_CASE("enumerate_worlds") {
  const auto small = enumerate_worlds(2, 2);
  REQUIRE(small.size() == 3);
  CHECK(small[0].total() == 0);
  CHECK(small[1].rows() == std::vector<std::vector<int>>{{0, 1}, {0, 0}});
  CHECK(small[2].rows() == std::vector<std::vector<int>>{{0, 2}, {0, 0}});
  for (int m = 2; m <= 4; ++m)
    for (int t = 0; t <= 3; ++t) {
      std::size_t got = 0;
      for_each_world({m, t, m, t}, WorldFilter::Proper, [&](const RepresentMatrix&) { ++got; });
      CHECK(BigInt(got) == count_matrices(m, t, [](const auto& a) { return oracle::connected(a); }));
    }
  CHECK_THROWS_AS(enumerate_worlds(12, 12), WebError);
}

TEST_CASE("three-edge census") {
  const auto census = edge_census(3);
  CHECK(census.size() == 30);
  std::size_t transitive = 0;
  for (const auto& a : census) transitive += passes(a, WorldFilter::Transitive);
  CHECK(transitive == 5);
  // Every peg count the three edges could cover.
  BigInt any_m = 0;
  for (int m = 2; m <= 6; ++m) any_m += count_matrices(m, 3, [](const auto& a) { return !oracle::isolated_peg(a); });
  CHECK(any_m == 75);
  BigInt capped = 0;
  for (int m = 2; m <= 4; ++m) capped += count_matrices(m, 3, [](const auto& a) { return !oracle::isolated_peg(a); });
  CHECK(capped == 30);
}

TEST_CASE("nww") {
  for (int t = 1; t <= 5; ++t) CHECK(nww(2, t, 1) == 1);
  CHECK(nww(2, 0, 0) == 1);
  CHECK(nww(3, 2, 2) == 3);
  for (int m = 2; m <= 4; ++m)
    for (int t = 0; t <= 4; ++t)
      for (int n = 0; n <= 4; ++n) {
        const BigInt expect = count_matrices(m, t, [&](const auto& a) { return oracle::nonzero(a) == n; });
        CHECK(nww(m, t, n) == expect);
        CHECK(nww_series_coefficient(m, t, n) == expect);
      }
}

TEST_CASE("nwwnip") {
  CHECK(nwwnip(2, 1, 1) == 1);
  CHECK(nwwnip(3, 1, 1) == 0);
  for (int a = 2; a <= 5; ++a)
    for (int b = 1; b <= 4; ++b)
      for (int c = 1; c <= 4; ++c) {
        const BigInt expect =
            count_matrices(a, b, [&](const auto& m) { return oracle::nonzero(m) == c && !oracle::isolated_peg(m); });
        CHECK(nwwnip(a, b, c) == expect);
        CHECK(nwwnip_direct(a, b, c) == expect);
      }
}

TEST_CASE("npww") {
  for (int m = 1; m <= 5; ++m) CHECK(npww(m, 1, 2) == 1);
  CHECK(npww(1, 1, 2) == 1);
  CHECK(npww(1, 1, 3) == 0);
  CHECK(npww(3, 3, 3) == 1);
  const auto table = npww_table(4, 4, 4);
  for (int m = 1; m <= 4; ++m)
    for (int t = 1; t <= 4; ++t)
      for (int n = 1; n <= 4; ++n) {
        const BigInt expect =
            n == 1 ? BigInt(0)
                   : count_matrices(n, m, [&](const auto& a) { return oracle::nonzero(a) == t && oracle::connected(a); });
        CHECK(table[m][t][n] == expect);
        CHECK(npww(m, t, n) == expect);
        CHECK(npww_direct(m, t, n) == expect);
      }
}

TEST_CASE("truncated series") {
  const std::vector<int> orders{4};
  const auto x = TruncatedSeries::variable(orders, 0);
  const auto g = TruncatedSeries::geometric(orders, 0);
  const std::array<int, 1> e3{3};
  CHECK(g.coefficient(e3) == 1);
  CHECK((x * g).coefficient(e3) == 1);
  // log(1 + x) = x - x^2/2 + x^3/3 - ...
  const auto l = x.log1p();
  CHECK(l.coefficient(e3) == BigRational(1, 3));
  const std::array<int, 1> e2{2};
  CHECK(l.coefficient(e2) == BigRational(-1, 2));
  CHECK((x + x).pow(2).coefficient(e2) == 4);
  const std::array<int, 1> e5{5};
  CHECK_THROWS_AS(g.coefficient(e5), WebError);
  CHECK((g - g).is_zero());
}
