#pragma once

// JSON and DOT interchange: complexes as {"vertices": N, "edges": [[i,j],...]},
// defining graphs as {"labels": [...], "edges": [[a,b],...]} or DOT, and
// deterministic DOT emission for auxiliary graphs.

#include <string>

#include <json.hpp>

#include "cubex/auxgraph.hpp"
#include "cubex/builders.hpp"
#include "cubex/complex.hpp"

namespace cubex {

using nlohmann::json;

json complex_to_json(const CubeComplex& x);
CubeComplex complex_from_json(const json& j);

json defining_graph_to_json(const DefiningGraph& g);
DefiningGraph defining_graph_from_json(const json& j);

// minimal undirected DOT reader: `graph name { a -- b; c; }`
DefiningGraph defining_graph_from_dot(const std::string& text);

// deterministic: nodes and edges sorted by id
std::string auxgraph_to_dot(const AuxGraph& g, const std::string& name = "G");

json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const json& j);
std::string read_text_file(const std::string& path);

// dispatches on content: a complex file or a defining graph file
bool looks_like_complex(const json& j);

}  // namespace cubex
