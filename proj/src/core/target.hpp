#pragma once

#include <cstdint>
#include <vector>

#include "core/graph.hpp"

namespace homcert {

enum class Side : std::uint8_t { upper, lower };

/// Where a vertex of a constructed target came from.
struct Origin {
  Vertex vertex;
  Side side;
  std::uint32_t copy;

  bool operator==(const Origin&) const = default;
};

/// A graph whose vertices are split into an upper set U and a lower set L,
/// with every edge running between U and L.
struct TwoSortedTarget {
  Graph graph;
  VertexSet upper;
  VertexSet lower;
  /// One entry per vertex; empty when the target was read from a file
  /// without provenance.
  std::vector<Origin> provenance;

  /// Throws Error(invalid_input) unless U/L partition the vertices and no
  /// edge stays inside U or inside L.
  static TwoSortedTarget make(Graph graph, const std::vector<Vertex>& upper,
                              std::vector<Origin> provenance = {});
};

}  // namespace homcert
