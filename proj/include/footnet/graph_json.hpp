#pragma once

#include <string>
#include <variant>

#include "footnet/graph.hpp"

namespace footnet {

/// Interchange JSON for oracle cross-checks:
/// {"directed": bool, "nodes": [ids...],
///  "edges": [{"a": id, "b": id, "w": weight, "count": int?}...]}
/// with nodes and edges in lexicographic order. "count" only appears on
/// directed arcs.
std::string graph_to_json(const UndirectedWeightedGraph& graph);
std::string graph_to_json(const DirectedWeightedGraph& graph);

using AnyGraph = std::variant<UndirectedWeightedGraph, DirectedWeightedGraph>;

/// Parses either graph kind back from the interchange JSON. Throws
/// ParseError on malformed input.
AnyGraph graph_from_json(const std::string& text);

} // namespace footnet
