#include "core/targets.hpp"

#include <charconv>
#include <vector>

namespace homcert {

Graph h_ind() {
  const std::vector<Edge> edges{{0, 1}};
  const std::vector<Vertex> loops{1};
  return Graph::from_edges(2, edges, loops);
}

Graph complete_graph(std::size_t k, bool looped) {
  std::vector<Edge> edges;
  std::vector<Vertex> loops;
  for (Vertex i = 0; i < k; ++i) {
    for (Vertex j = i + 1; j < k; ++j) edges.emplace_back(i, j);
    if (looped) loops.push_back(i);
  }
  return Graph::from_edges(k, edges, loops);
}

std::optional<Graph> named_target(std::string_view name) {
  if (name == "hind") return h_ind();
  if (name == "looped-vertex") return complete_graph(1, true);
  bool looped = false;
  if (name.starts_with("looped-")) {
    looped = true;
    name.remove_prefix(7);
  }
  if (!name.starts_with("k") || name.size() < 2) return std::nullopt;
  std::size_t k = 0;
  const auto* end = name.data() + name.size();
  auto [ptr, ec] = std::from_chars(name.data() + 1, end, k);
  if (ec != std::errc{} || ptr != end || k < 1 || k > 24) return std::nullopt;
  return complete_graph(k, looped);
}

}  // namespace homcert
