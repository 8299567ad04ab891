#include "webworld/io.hpp"
#include "webworld/error.hpp"

#include <limits>

namespace webworld {

namespace {

int as_int(const json& v, const char* what) {
  if (!v.is_number_integer()) throw WebError(ErrorKind::ParseError, std::string(what) + " must be an integer");
  const auto x = v.get<long long>();
  if (x < std::numeric_limits<int>::min() || x > std::numeric_limits<int>::max())
    throw WebError(ErrorKind::ParseError, std::string(what) + " out of range");
  return static_cast<int>(x);
}

}  // namespace

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw WebError(ErrorKind::ParseError, e.what());
  }
}

WebDiagram diagram_from_json(const json& j) {
  if (!j.is_object() || !j.contains("edges") || !j["edges"].is_array())
    throw WebError(ErrorKind::ParseError, "diagram needs an \"edges\" array");
  std::vector<Edge> edges;
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 4) throw WebError(ErrorKind::ParseError, "each edge is [x, y, a, b]");
    edges.push_back({as_int(e[0], "x"), as_int(e[1], "y"), as_int(e[2], "a"), as_int(e[3], "b")});
  }
  std::optional<int> n;
  if (j.contains("n")) n = as_int(j["n"], "n");
  return WebDiagram::validate(std::move(edges), n);
}

json to_json(const WebDiagram& d) {
  json edges = json::array();
  for (const Edge& e : d.edges()) edges.push_back({e.x, e.y, e.a, e.b});
  return {{"n", d.peg_count()}, {"edges", edges}};
}

RepresentMatrix represent_from_json(const json& j) {
  if (!j.is_array()) throw WebError(ErrorKind::ParseError, "represent matrix must be an array of rows");
  std::vector<std::vector<int>> rows;
  for (const auto& r : j) {
    if (!r.is_array()) throw WebError(ErrorKind::ParseError, "represent matrix rows must be arrays");
    std::vector<int> row;
    for (const auto& v : r) row.push_back(as_int(v, "matrix entry"));
    rows.push_back(std::move(row));
  }
  return RepresentMatrix::from_rows(rows);
}

json to_json(const RepresentMatrix& a) { return a.rows(); }

WebWorld world_from_json(const json& j, std::size_t guard) {
  if (j.is_object() && j.contains("represent"))
    return web_world(diagram_from_represent(represent_from_json(j["represent"])), guard);
  if (j.is_object() && j.contains("seed_diagram")) return web_world(diagram_from_json(j["seed_diagram"]), guard);
  if (j.is_object() && j.contains("edges")) return web_world(diagram_from_json(j), guard);
  throw WebError(ErrorKind::ParseError, "world needs \"represent\" or \"seed_diagram\"");
}

Poset poset_from_json(const json& j) {
  if (!j.is_object() || !j.contains("k")) throw WebError(ErrorKind::ParseError, "poset needs \"k\"");
  const int k = as_int(j["k"], "k");
  std::vector<std::pair<int, int>> pairs;
  if (j.contains("relations"))
    for (const auto& r : j["relations"]) {
      if (!r.is_array() || r.size() != 2) throw WebError(ErrorKind::ParseError, "relations are [lower, upper]");
      const int lo = as_int(r[0], "relation"), hi = as_int(r[1], "relation");
      if (lo < 1 || hi < 1 || lo > k || hi > k) throw WebError(ErrorKind::ParseError, "relation outside 1..k");
      pairs.emplace_back(lo, hi);
    }
  return Poset::from_relations(k, pairs);
}

json to_json(const Poset& p) {
  json rel = json::array();
  for (auto [lo, hi] : p.covers()) rel.push_back({lo, hi});
  return {{"k", p.size()}, {"relations", rel}};
}

json to_json(const BigRational& r) { return to_string(r); }

json to_json(const BigInt& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
    return v.convert_to<long long>();
  return v.str();
}

json to_json(const IntPolynomial& p) {
  json out = json::array();
  for (const auto& c : p.coefficients()) out.push_back(to_json(c));
  return out;
}

json to_json(const MixingMatrix& r) {
  json rows = json::array();
  for (std::size_t i = 0; i < r.dimension(); ++i) {
    json row = json::array();
    for (const auto& v : r.row(i)) row.push_back(to_json(v));
    rows.push_back(std::move(row));
  }
  return rows;
}

json to_json(const ColouringMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.dimension(); ++i) {
    json row = json::array();
    for (const auto& v : m.row(i)) row.push_back(to_json(v));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace webworld
