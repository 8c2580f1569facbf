#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "scop/core.hpp"

namespace scop {

// JSON form of a system:
//   {
//     "states":     [{"id", "label", "ground", "frequencies"?, "ratings"?}],
//     "contexts":   [{"id", "label"}],
//     "properties": [{"id", "label"}],
//     "mu":  [{"q", "e", "p", "prob"}],
//     "nu":  [{"p", "a", "weight"}],
//     "exemplar_order"? : [names]
//   }
// mu lists the diagonal entries mu(p, e, p) = 1 for every eigenstate (which
// pins the eigenstate sets on reload) plus any explicit transition rows.
// Triples that are absent fall back to the default collapse model: rows of
// eigenstates are point masses, other rows are uniform over the context's
// eigenstate set. nu entries absent from the list default to weight 0.
nlohmann::ordered_json to_json(const Scop& s);
Scop scop_from_json(const nlohmann::ordered_json& doc);

std::string to_json_string(const Scop& s);
Scop scop_from_json_string(const std::string& text);
Scop load_scop(std::istream& in);

}  // namespace scop
