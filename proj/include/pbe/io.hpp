#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pbe/graph.hpp"
#include "pbe/tree_algorithm.hpp"

namespace pbe {

enum class GraphFormat { edge_list, json };

std::optional<GraphFormat> format_from_name(std::string_view name);

struct GraphDocument {
    GraphFormat format = GraphFormat::edge_list;
    Graph graph;  // carries the original labels
};

// Edge list: one "u v" per line, '#' comments, blank lines ignored; a line
// with a single label declares an isolated vertex.
// JSON: {"vertices": [...], "edges": [[u, v], ...]}; "vertices" may be omitted.
GraphDocument parse_graph(std::string_view text, GraphFormat format);
std::string emit_graph(const Graph& g, GraphFormat format);

// One clique per line, given by vertex labels.
std::vector<VertexSet> parse_clique_order(std::string_view text, const Graph& g);
// One choice per line: "<clique indices, 1-based> [: <vertex label>]".
std::vector<ScriptEntry> parse_script(std::string_view text, const Graph& g);

}  // namespace pbe
