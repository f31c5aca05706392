#pragma once

#include <json.hpp>

#include "invg/graph.hpp"
#include "invg/grid.hpp"
#include "invg/inversion_graph.hpp"
#include "invg/letters.hpp"
#include "invg/perm_letters.hpp"
#include "invg/pins.hpp"
#include "invg/prime.hpp"
#include "invg/reflections.hpp"

namespace invg {

using Json = nlohmann::ordered_json;

// Readers throw ParseError on malformed payloads and DomainError when the
// payload is well formed but violates a type invariant.

Json to_json(const Permutation& p);  // {"perm":"31542"}
Permutation permutation_from_json(const Json& j);

Json to_json(const Graph& g);  // {"n":n,"edges":[[u,v],...]}
Graph graph_from_json(const Json& j);

Json to_json(const IntervalSystem& s);
IntervalSystem interval_system_from_json(const Json& j);

Json to_json(const Orientation& o);  // [[u,v],...] meaning u -> v
Orientation orientation_from_json(int n, const Json& j);

Json to_json(const PinSequence& s);  // {"host":"...","pins":[[i,v],...]}
PinSequence pin_sequence_from_json(const Json& j);

Json to_json(const Lettering& l);
Lettering lettering_from_json(const Json& j);

Json to_json(const GridMatrix& m);  // {"cols","rows","entries":[[col,row,+-1],...]}
GridMatrix matrix_from_json(const Json& j);

Json to_json(const GridDrawing& d);
GridDrawing drawing_from_json(const Json& j);

Json to_json(const PermLettering& l);
PermLettering perm_lettering_from_json(const Json& j);

Json to_json(const Reflection& t);
Reflection reflection_from_json(const Json& j);
Json to_json(const std::vector<Reflection>& seq);
std::vector<Reflection> reflections_from_json(const Json& j);

Json parse_json(std::string_view text);

}  // namespace invg
