#pragma once

#include <optional>
#include <string_view>

#include "core/graph.hpp"

namespace homcert {

/// Built-in target graphs by name:
///   "hind"          one unlooped vertex 0 joined to looped vertex 1
///   "k<m>"          complete loopless graph on m vertices (1 <= m <= 24)
///   "looped-k<m>"   complete graph on m vertices with every loop
///   "looped-vertex" single looped vertex
std::optional<Graph> named_target(std::string_view name);

Graph h_ind();
Graph complete_graph(std::size_t k, bool looped = false);

}  // namespace homcert
