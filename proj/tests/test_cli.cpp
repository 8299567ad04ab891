#include "webworld/cli.hpp"
#include "webworld/error.hpp"
#include "webworld/io.hpp"

#include <doctest.h>

#include <sstream>

using namespace webworld;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "webworld");
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

const std::string kFalkirk = R"({"seed_diagram":{"n":4,"edges":[[1,2,1,1],[2,3,2,1],[3,4,2,1]]}})";

}  // namespace

TEST_CASE("diagram json round trip") {
  const auto d = WebDiagram::validate({{1, 2, 1, 1}, {1, 7, 2, 2}, {5, 7, 2, 1}, {5, 6, 1, 1}}, 8);
  CHECK(diagram_from_json(to_json(d)) == d);
  CHECK(diagram_from_json(parse_json(R"({"edges":[[1,2,1,1]]})")).peg_count() == 2);
  CHECK_THROWS_AS(diagram_from_json(parse_json(R"({"edges":[[1,2,1]]})")), WebError);
  CHECK_THROWS_AS(diagram_from_json(parse_json(R"({"edges":[[1,2,1,"a"]]})")), WebError);
  CHECK_THROWS_AS(parse_json("{"), WebError);
}

TEST_CASE("represent and poset json round trip") {
  const auto a = RepresentMatrix::from_rows({{0, 1, 1}, {0, 0, 2}, {0, 0, 0}});
  CHECK(represent_from_json(to_json(a)) == a);
  const auto p = poset_from_json(parse_json(R"({"k":3,"relations":[[1,2],[1,3]]})"));
  CHECK(p.leq(1, 3));
  CHECK(poset_from_json(to_json(p)) == p);
  CHECK_THROWS_AS(poset_from_json(parse_json(R"({"k":2,"relations":[[1,3]]})")), WebError);
}

TEST_CASE("world json variants") {
  CHECK(world_from_json(parse_json(kFalkirk)).size() == 4);
  CHECK(world_from_json(parse_json(R"({"represent":[[0,2],[0,0]]})")).size() == 2);
  CHECK(to_json(BigRational(-1, 6)) == "-1/6");
  CHECK(to_json(IntPolynomial{0, 4, 10, 6}) == json::array({0, 4, 10, 6}));
  CHECK(to_json(factorial(30)).is_string());
}

TEST_CASE("cli: falkirk mixing csv") {
  const auto r = run({"matrix", "--kind", "mixing", "--json", kFalkirk, "--format", "csv"});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out == "1/3,-1/3,-1/3,1/3\n-1/6,1/6,1/6,-1/6\n-1/6,1/6,1/6,-1/6\n1/3,-1/3,-1/3,1/3\n");
  const auto j = json::parse(run({"matrix", "--kind", "mixing", "--json", kFalkirk}).out);
  CHECK(j["trace"] == "1");
  CHECK(j["dimension"] == 4);
}

TEST_CASE("cli: world and validate") {
  const auto w = json::parse(run({"world", "--json", R"({"n":2,"edges":[[1,2,1,1]]})"}).out);
  CHECK(w["size"] == 1);
  const auto v = run({"validate", "--json", R"({"edges":[[1,2,1,1],[1,3,2,1]]})", "--format", "csv"});
  CHECK(v.code == 0);
  CHECK(v.out == "n,edges,pegs\n3,2,2;1;1\n");
}

TEST_CASE("cli: traces two ways agree") {
  const auto a = json::parse(run({"trace", "--json", kFalkirk}).out);
  const auto b = json::parse(run({"trace", "--via", "posets", "--json", kFalkirk}).out);
  CHECK(a["colouring"] == b["colouring"]);
  CHECK(a["mixing"] == "1");
  CHECK(b["mixing"] == "1");
}

TEST_CASE("cli: posets for one diagram") {
  const auto j = json::parse(run({"posets", "--json", R"({"n":4,"edges":[[1,2,1,2],[2,3,1,1],[3,4,2,1]]})"}).out);
  CHECK(j["blocks"].size() == 3);
  CHECK(j["linear_extensions"].size() == 2);
  CHECK(j["diagonal"]["mixing"] == "1/6");
}

TEST_CASE("cli: enumerate") {
  const auto census = json::parse(run({"enumerate", "--census", "3"}).out);
  CHECK(census["count"] == 30);
  const auto t = run({"enumerate", "--count", "nww", "--max-m", "3", "--max-t", "2", "--max-n", "2", "--format",
                      "csv", "--check"});
  CHECK(t.code == 0);
  CHECK(t.out.find("3,2,2,3,3\n") != std::string::npos);
  CHECK(run({"enumerate", "--count", "npww", "--max-m", "3", "--max-t", "3", "--max-n", "3", "--check"}).code == 0);
}

TEST_CASE("cli: cases and transitive") {
  const auto c1 = json::parse(run({"case1", "--n", "3"}).out);
  CHECK(c1["closed"]["mixing"] == "2");
  CHECK(c1["match"] == true);
  const auto c3 = json::parse(run({"case3", "--n", "3"}).out);
  CHECK(c3["closed"]["mixing"] == "4");
  CHECK(c3["match"] == true);
  const auto m = run({"case2", "--n", "1", "--matrix", "colouring", "--format", "csv"});
  CHECK(m.code == 0);
  const auto t = json::parse(run({"transitive", "--edges", "3", "--list"}).out);
  CHECK(t["count"] == 5);
  CHECK(t["matrices"][0].contains("core"));
}

TEST_CASE("cli: verify") {
  const auto r = run({"verify", "--suite", "case1", "--n", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("(n-1)! = 2 matches brute trace") != std::string::npos);
  CHECK(run({"verify", "--suite", "keys"}).code == 0);
  CHECK(run({"verify", "--suite", "transitive"}).code == 0);
}

TEST_CASE("cli: exit codes") {
  CHECK(run({}).code == cli::kExitUsage);
  CHECK(run({"nope"}).code == cli::kExitUsage);
  CHECK(run({"matrix", "--kind", "other", "--json", kFalkirk}).code == cli::kExitUsage);
  CHECK(run({"world"}).code == cli::kExitUsage);
  CHECK(run({"world", "--json", "{"}).code == cli::kExitUsage);
  CHECK(run({"world", "--json", R"({"edges":[[2,1,1,1]]})"}).code == cli::kExitUsage);
  CHECK(run({"world", "--max-world", "2", "--json", kFalkirk}).code == cli::kExitGuard);
  CHECK(run({"transitive", "--edges", "9"}).code == cli::kExitGuard);
  CHECK(run({"--help"}).code == cli::kExitOk);
}

TEST_CASE("cli: deterministic output") {
  const std::vector<std::string> args{"world", "--json", kFalkirk};
  CHECK(run(args).out == run(args).out);
}
