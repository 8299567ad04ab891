#include "oracles.hpp"

#include "webworld/error.hpp"
#include "webworld/matrices.hpp"
#include "webworld/posets.hpp"

#include <doctest.h>

using namespace webworld;

namespace {

const WebDiagram kFigure1 = WebDiagram::validate({{1, 2, 1, 1}, {1, 7, 2, 2}, {2, 4, 2, 3}, {3, 4, 1, 1}, {3, 6, 2, 4},
                                                  {4, 6, 2, 3}, {4, 6, 4, 2}, {5, 6, 1, 1}, {5, 7, 2, 1}});
const WebDiagram kFalkirk = WebDiagram::validate({{1, 2, 1, 1}, {2, 3, 2, 1}, {3, 4, 2, 1}});
// The falkirk member whose middle edge sits below both neighbours.
const WebDiagram kVee = WebDiagram::validate({{1, 2, 1, 2}, {2, 3, 1, 1}, {3, 4, 2, 1}});

oracle::Order to_order(const Poset& p) {
  oracle::Order o{p.size(), {}};
  for (auto c : p.covers()) o.less.push_back(c);
  return o;
}

Poset vee() { return Poset::from_relations(3, {{1, 2}, {1, 3}}); }
Poset wedge() { return Poset::from_relations(3, {{1, 3}, {2, 3}}); }

}  // namespace

TEST_CASE("poset basics") {
  const Poset p = Poset::from_relations(3, {{1, 2}, {2, 3}});
  CHECK(p.leq(1, 3));
  CHECK(p.covers() == std::vector<std::pair<int, int>>{{1, 2}, {2, 3}});
  CHECK(p.is_partial_order());
  CHECK(p.is_naturally_labeled());
  CHECK(p == Poset::chain(3));
  CHECK_FALSE(Poset::from_relations(2, {{2, 1}}).is_naturally_labeled());
  CHECK_THROWS_AS(Poset::from_relations(2, {{1, 2}, {2, 1}}), WebError);
  CHECK(vee().isomorphism_key() == Poset::from_relations(3, {{2, 1}, {2, 3}}).isomorphism_key());
  CHECK(vee().isomorphism_key() != wedge().isomorphism_key());
}

TEST_CASE("Figure 1 decomposes into seven blocks") {
  const auto blocks = decompose(kFigure1);
  REQUIRE(blocks.size() == 7);
  const std::vector<Edge> e4{{2, 4, 2, 3}, {4, 6, 2, 3}, {4, 6, 4, 2}};
  bool found = false;
  for (const auto& b : blocks) found = found || b.edges == e4;
  CHECK(found);
  WebDiagram acc = WebDiagram::validate(std::vector<Edge>{}, 7);
  for (const auto& b : blocks) acc = sum(acc, b.normalized);
  CHECK(acc == kFigure1);
  const auto p = decomposition_poset(kFigure1);
  CHECK(p.order.is_partial_order());
  CHECK(p.order.is_naturally_labeled());
}

TEST_CASE("decompose small diagrams") {
  CHECK(decompose(WebDiagram::validate({{1, 2, 1, 1}})).size() == 1);
  const auto twin = decomposition_poset(WebDiagram::validate({{1, 2, 1, 1}, {1, 2, 2, 2}}));
  REQUIRE(twin.blocks.size() == 2);
  CHECK(twin.blocks[0].normalized == twin.blocks[1].normalized);
  CHECK_FALSE(twin.has_distinct_blocks());
  const auto anti = decomposition_poset(WebDiagram::validate({{1, 2, 1, 1}, {3, 4, 1, 1}}));
  CHECK(anti.order == Poset::antichain(2));
}

TEST_CASE("falkirk poset census") {
  std::map<std::string, std::size_t> expect;
  expect[Poset::chain(3).isomorphism_key()] = 2;
  expect[vee().isomorphism_key()] = 1;
  expect[wedge().isomorphism_key()] = 1;
  CHECK(poset_census(web_world(kFalkirk)) == expect);
}

TEST_CASE("linear extensions and descents") {
  const auto le = linear_extensions(vee());
  CHECK(le == std::vector<LinearExtension>{{1, 2, 3}, {1, 3, 2}});
  CHECK(descents(le[0]) == 0);
  CHECK(descents(le[1]) == 1);
  CHECK(linear_extensions(Poset::chain(4)).size() == 1);
  std::multiset<int> des;
  for (const auto& e : linear_extensions(Poset::antichain(3))) des.insert(descents(e));
  CHECK(des == std::multiset<int>{0, 1, 1, 1, 1, 2});

  const std::vector<Poset> samples{vee(), wedge(), Poset::antichain(4), Poset::chain(3),
                                   Poset::from_relations(4, {{1, 3}, {2, 3}, {2, 4}}),
                                   Poset::from_relations(5, {{1, 2}, {1, 3}, {3, 5}, {4, 5}})};
  for (const auto& p : samples) CHECK(linear_extensions(p) == oracle::linear_extensions(to_order(p)));
}

TEST_CASE("omega and theta") {
  for (unsigned m = 0; m <= 5; ++m) CHECK(omega(Poset::antichain(2), m) == m * m);
  CHECK(theta(Poset::chain(2), 2) == 1);
  CHECK(omega(vee(), 2) == 5);
  const std::vector<Poset> samples{vee(), wedge(), Poset::antichain(3), Poset::chain(4),
                                   Poset::from_relations(4, {{1, 3}, {2, 3}, {2, 4}})};
  for (const auto& p : samples)
    for (unsigned m = 0; m <= 4; ++m) {
      CHECK(omega(p, m) == oracle::order_preserving(to_order(p), static_cast<int>(m), false));
      CHECK(theta(p, m) == oracle::order_preserving(to_order(p), static_cast<int>(m), true));
      CHECK(omega_direct(p, m) == omega(p, m));
      CHECK(theta_direct(p, m) == theta(p, m));
    }
}

TEST_CASE("descent formulas for the vee diagram") {
  CHECK(descent_colouring_poly(vee()) == IntPolynomial{0, 1, 3, 2});
  CHECK(descent_mixing(vee()) == BigRational(1, 6));
  CHECK(descent_colouring_poly(Poset::chain(1)) == IntPolynomial{0, 1});
  CHECK(descent_mixing(Poset::chain(1)) == 1);

  const auto p = decomposition_poset(kVee);
  CHECK(p.order == vee());
  CHECK(p.has_distinct_blocks());
  CHECK(diag_colouring_poly(p) == IntPolynomial{0, 1, 3, 2});
  CHECK(diag_mixing(p) == BigRational(1, 6));
  CHECK(oracle::colouring(kVee.edges(), kVee.edges(), 4) == IntPolynomial{0, 1, 3, 2}.coefficients());
  CHECK(oracle::mixing(kVee.edges(), kVee.edges(), 4) == BigRational(1, 6));
}

TEST_CASE("repeated blocks are rejected") {
  const auto twin = decomposition_poset(WebDiagram::validate({{1, 2, 1, 1}, {1, 2, 2, 2}}));
  try {
    diag_mixing(twin);
    FAIL("expected RepeatedBlocks");
  } catch (const WebError& e) {
    CHECK(e.kind() == ErrorKind::RepeatedBlocks);
  }
}

TEST_CASE("trace via posets") {
  const auto tp = trace_via_posets(web_world(kFalkirk));
  CHECK(tp.colouring == IntPolynomial{0, 4, 10, 6});
  CHECK(tp.mixing == 1);
  const auto single = trace_via_posets(web_world(WebDiagram::validate({{1, 2, 1, 1}})));
  CHECK(single.colouring == IntPolynomial{0, 1});
  CHECK(single.mixing == 1);
  try {
    trace_via_posets(web_world(WebDiagram::validate({{1, 2, 1, 1}, {1, 2, 2, 2}})));
    FAIL("expected LabelNotOne");
  } catch (const WebError& e) {
    CHECK(e.kind() == ErrorKind::LabelNotOne);
  }
}

TEST_CASE("diagonal formula equals brute force on distinct-block diagrams") {
  const std::vector<WebDiagram> seeds{
      kFalkirk,
      WebDiagram::validate({{1, 2, 1, 1}, {1, 3, 2, 1}, {2, 3, 2, 2}}),
      WebDiagram::validate({{1, 2, 1, 1}, {2, 3, 2, 1}, {2, 4, 3, 1}, {3, 4, 2, 2}}),
  };
  for (const auto& s : seeds) {
    const WebWorld w = web_world(s);
    for (const auto& d : w.diagrams()) {
      const auto p = decomposition_poset(d);
      if (!p.has_distinct_blocks()) continue;
      CHECK(diag_colouring_poly(p).coefficients() == oracle::colouring(d.edges(), d.edges(), d.peg_count()));
      CHECK(diag_mixing(p) == oracle::mixing(d.edges(), d.edges(), d.peg_count()));
    }
  }
}
