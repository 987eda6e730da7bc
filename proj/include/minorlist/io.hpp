#ifndef MINORLIST_IO_HPP
#define MINORLIST_IO_HPP

#include <string>

#include "json.hpp"
#include "minorlist/multicopy.hpp"
#include "minorlist/steiner.hpp"
#include "minorlist/witness.hpp"

namespace minorlist {

using nlohmann::json;

// Lambda text format: comma-separated parts, star multiplicity as
// value*count, e.g. "1*46,6".  Serialization groups equal parts and lists
// values ascending.
Lambda parse_lambda(const std::string& text);
std::string lambda_to_string(const Lambda& lam);

Rational parse_rational_text(const std::string& text);  // "1/3" or "2"

// Graph JSON: {"n":…, "edges":[[u,v],…], "labels":{"vid":"text",…}?}
json graph_to_json(const Graph& g);
Graph graph_from_json(const json& j);

// DIMACS .col: "p edge n m" then "e u v" lines, 1-based.
std::string graph_to_dimacs(const Graph& g);

// ListAssignment JSON: {"classes":[[colours],…], "lists":[[colours],…]}
json assignment_to_json(const ListAssignment& l, const ColourClasses& c);
void assignment_from_json(const json& j, ListAssignment& l, ColourClasses& c);

json witness_to_json(const Witness& w);
Witness witness_from_json(const json& j);

json steiner_to_json(const SteinerGraph& s);
SteinerGraph steiner_from_json(const json& j);

json multicopy_to_json(const MultiCopyBuild& b);

json report_json(const std::string& command, const json& inputs, const std::string& verdict,
                 const json& details, long long runtime_ms);

}  // namespace minorlist

#endif
