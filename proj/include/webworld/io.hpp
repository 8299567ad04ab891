#pragma once

#include "webworld/diagram.hpp"
#include "webworld/enumeration.hpp"
#include "webworld/matrices.hpp"
#include "webworld/polynomial.hpp"
#include "webworld/posets.hpp"
#include "webworld/world.hpp"

#include <json.hpp>

#include <string>

namespace webworld {

using json = nlohmann::json;

/// {"n": 7, "edges": [[1,2,1,1], ...]}; "n" is optional.
WebDiagram diagram_from_json(const json& j);
json to_json(const WebDiagram& d);

/// Nested arrays, one per row.
RepresentMatrix represent_from_json(const json& j);
json to_json(const RepresentMatrix& a);

/// {"represent": [[...]]} or {"seed_diagram": {...}}.
WebWorld world_from_json(const json& j, std::size_t guard = kDefaultWorldGuard);

/// {"k": 3, "relations": [[1,2],[1,3]]} with cover relations only.
Poset poset_from_json(const json& j);
json to_json(const Poset& p);

/// "p/q", or "p" for integers.
json to_json(const BigRational& r);
/// Coefficient array, constant term first; integers outside int64 become strings.
json to_json(const IntPolynomial& p);
json to_json(const BigInt& v);

json to_json(const MixingMatrix& r);
json to_json(const ColouringMatrix& m);

/// Parses text; throws WebError(ParseError) on malformed JSON.
json parse_json(const std::string& text);

}  // namespace webworld
