#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "binf/tableaux.hpp"

namespace binf {

using ojson = nlohmann::ordered_json;

// Input that does not match a file schema.
class FormatError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// { "type": "e6", "rows": [ [ {"elem": "-4+5+6", "count": 1} ], ... ] },
// rows bottom to top.
ojson tableau_to_json(const MLTableau& t);
// Checks the schema and that every entry lies in its row graph; marginal
// largeness is left to the caller.
MLTableau tableau_from_json(const nlohmann::json& j, std::optional<LieType> expected = std::nullopt);

// { "type": "e6", "coords": { "5:-1+2": 1, ... } } with every coordinate
// listed in canonical tensor order.
ojson coords_to_json(const ReducedCounts& rc);
// Missing coordinates read as 0; unknown keys and non-integers are rejected.
ReducedCounts coords_from_json(const nlohmann::json& j, std::optional<LieType> expected = std::nullopt);

LieType type_from_json(const nlohmann::json& j, std::optional<LieType> expected);

// Whole basic crystal when row is nullopt. Nodes of C-bar_r are flagged.
ojson graph_to_json(LieType t, std::optional<int> row);
std::string graph_to_dot(LieType t, std::optional<int> row);

}  // namespace binf
