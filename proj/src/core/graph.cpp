#include "core/graph.hpp"

#include <algorithm>
#include <string>

#include "core/error.hpp"

namespace homcert {

Graph Graph::from_edges(std::size_t vertex_count, std::span<const Edge> edges,
                        std::span<const Vertex> loops) {
  Graph g;
  g.adjacency_.resize(vertex_count);
  g.neighbor_sets_.assign(vertex_count, VertexSet(vertex_count));
  auto check = [&](Vertex v) {
    if (v >= vertex_count) {
      throw Error(ErrorCode::invalid_input, "vertex index " + std::to_string(v) + " out of range for " +
                                                std::to_string(vertex_count) + " vertices");
    }
  };
  for (const auto& [u, v] : edges) {
    check(u);
    check(v);
    g.neighbor_sets_[u].insert(v);
    g.neighbor_sets_[v].insert(u);
  }
  for (Vertex v : loops) {
    check(v);
    g.neighbor_sets_[v].insert(v);
  }
  for (std::size_t v = 0; v < vertex_count; ++v) g.adjacency_[v] = g.neighbor_sets_[v].to_vector();
  return g;
}

std::vector<Vertex> Graph::loops() const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < vertex_count(); ++v) {
    if (has_loop(v)) out.push_back(v);
  }
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < vertex_count(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::size_t Graph::edge_count() const { return edges().size(); }

bool Graph::has_edge_or_loop() const {
  return std::any_of(adjacency_.begin(), adjacency_.end(), [](const auto& adj) { return !adj.empty(); });
}

std::vector<std::vector<Vertex>> Graph::components() const {
  std::vector<std::vector<Vertex>> out;
  std::vector<bool> seen(vertex_count(), false);
  for (Vertex start = 0; start < vertex_count(); ++start) {
    if (seen[start]) continue;
    std::vector<Vertex> component{start};
    seen[start] = true;
    for (std::size_t head = 0; head < component.size(); ++head) {
      for (Vertex w : adjacency_[component[head]]) {
        if (!seen[w]) {
          seen[w] = true;
          component.push_back(w);
        }
      }
    }
    std::sort(component.begin(), component.end());
    out.push_back(std::move(component));
  }
  return out;
}

BipartiteGraph BipartiteGraph::check_bipartition(Graph graph, std::span<const Vertex> class_e) {
  BipartiteGraph b;
  b.in_e_.assign(graph.vertex_count(), false);
  for (Vertex v : class_e) {
    if (v >= graph.vertex_count()) {
      throw Error(ErrorCode::invalid_input, "class_e vertex " + std::to_string(v) + " out of range");
    }
    b.in_e_[v] = true;
  }
  for (Vertex v = 0; v < graph.vertex_count(); ++v) {
    if (graph.has_loop(v)) {
      throw Error(ErrorCode::not_bipartite, "loop at vertex " + std::to_string(v));
    }
    (b.in_e_[v] ? b.class_e_ : b.class_o_).push_back(v);
  }
  for (const auto& [u, v] : graph.edges()) {
    if (b.in_e_[u] == b.in_e_[v]) {
      throw Error(ErrorCode::not_bipartite,
                  "edge {" + std::to_string(u) + "," + std::to_string(v) + "} lies within one class");
    }
  }
  b.graph_ = std::move(graph);
  return b;
}

std::optional<std::size_t> BipartiteGraph::regular_degree() const {
  if (vertex_count() == 0) return std::nullopt;
  const auto n = graph_.degree(0);
  for (Vertex v = 1; v < vertex_count(); ++v) {
    if (graph_.degree(v) != n) return std::nullopt;
  }
  return n;
}

std::optional<std::pair<std::size_t, std::size_t>> BipartiteGraph::biregular_degrees() const {
  if (class_e_.empty() || class_o_.empty()) return std::nullopt;
  const auto a = graph_.degree(class_e_.front());
  const auto b = graph_.degree(class_o_.front());
  for (Vertex v : class_e_) {
    if (graph_.degree(v) != a) return std::nullopt;
  }
  for (Vertex v : class_o_) {
    if (graph_.degree(v) != b) return std::nullopt;
  }
  return std::pair{a, b};
}

BipartiteGraph BipartiteGraph::swapped() const {
  BipartiteGraph b = *this;
  b.in_e_.flip();
  std::swap(b.class_e_, b.class_o_);
  return b;
}

}  // namespace homcert
