#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "core/vertex_set.hpp"

namespace homcert {

using Edge = std::pair<Vertex, Vertex>;

/// Finite undirected graph, loops allowed, no parallel edges. Immutable.
///
/// A loop at i is stored as i in adj(i), so adjacent(i, i) is exactly
/// "i has a loop". Neighbour lists are sorted and duplicate-free.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph from undirected pairs. A pair (i, i) is a loop.
  /// Duplicate pairs, in either orientation, collapse to one edge.
  /// Throws Error(invalid_input) when an endpoint is out of range.
  static Graph from_edges(std::size_t vertex_count, std::span<const Edge> edges,
                          std::span<const Vertex> loops = {});

  std::size_t vertex_count() const noexcept { return adjacency_.size(); }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_[v]; }
  const VertexSet& neighbor_set(Vertex v) const { return neighbor_sets_[v]; }
  bool adjacent(Vertex u, Vertex v) const { return neighbor_sets_[u].contains(v); }
  bool has_loop(Vertex v) const { return adjacent(v, v); }
  std::size_t degree(Vertex v) const { return adjacency_[v].size(); }

  std::vector<Vertex> loops() const;
  /// Non-loop edges as (u, v) with u < v, in lexicographic order.
  std::vector<Edge> edges() const;
  std::size_t edge_count() const;
  bool has_edge_or_loop() const;

  /// Connected components, each sorted, ordered by smallest vertex.
  std::vector<std::vector<Vertex>> components() const;

  bool operator==(const Graph& other) const { return adjacency_ == other.adjacency_; }

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<VertexSet> neighbor_sets_;
};

/// A loopless graph with a caller-declared partition into classes E and O
/// such that every edge joins the two classes.
class BipartiteGraph {
 public:
  BipartiteGraph() = default;

  /// Validates that class_e and its complement form a proper bipartition.
  /// The orientation is never inferred.
  static BipartiteGraph check_bipartition(Graph graph, std::span<const Vertex> class_e);

  const Graph& graph() const noexcept { return graph_; }
  std::size_t vertex_count() const noexcept { return graph_.vertex_count(); }
  bool in_class_e(Vertex v) const { return in_e_[v]; }
  const std::vector<Vertex>& class_e() const noexcept { return class_e_; }
  const std::vector<Vertex>& class_o() const noexcept { return class_o_; }

  /// Common degree n when every vertex has degree n.
  std::optional<std::size_t> regular_degree() const;
  /// (a, b) when every E-vertex has degree a and every O-vertex degree b.
  std::optional<std::pair<std::size_t, std::size_t>> biregular_degrees() const;

  /// Same graph with the roles of E and O exchanged.
  BipartiteGraph swapped() const;

  bool operator==(const BipartiteGraph& other) const {
    return graph_ == other.graph_ && in_e_ == other.in_e_;
  }

 private:
  Graph graph_;
  std::vector<bool> in_e_;
  std::vector<Vertex> class_e_;
  std::vector<Vertex> class_o_;
};

}  // namespace homcert
