#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "core/activities.hpp"
#include "core/graph.hpp"
#include "core/target.hpp"
#include "json.hpp"

namespace homcert {

using Json = nlohmann::json;

/// Everything a graph file may carry. Keys: "vertices", "edges", "loops",
/// plus optional "class_e" (bipartite source), "upper" and "provenance"
/// (two-sorted target). Unknown keys are rejected.
struct GraphDocument {
  Graph graph;
  std::optional<std::vector<Vertex>> class_e;
  std::optional<std::vector<Vertex>> upper;
  std::vector<Origin> provenance;
};

Json parse_json(std::string_view text);

GraphDocument parse_graph_document(const Json& doc);
Graph parse_graph(std::string_view text);
/// Requires "class_e".
BipartiteGraph parse_bipartite(std::string_view text);
BipartiteGraph bipartite_from_json(const Json& doc);
/// Requires "upper".
TwoSortedTarget parse_target(std::string_view text);

/// {"activities": {"<vertex>": {"lambda": "p/q", "mu": "p/q"}}} and/or
/// {"uniform": {"lambda": ..., "mu": ...}}. "lambda" alone sets both.
ActivitySpec activities_from_json(const Json& doc);
ActivitySpec parse_activities(std::string_view text);

Json to_json(const Graph& g);
Json to_json(const BipartiteGraph& g);
Json to_json(const TwoSortedTarget& t);
Json to_json(const ActivitySystem& acts);

/// Compact single-line serialization used for every output document.
std::string dump(const Json& doc);

}  // namespace homcert
