#include "core/target.hpp"

#include <string>

#include "core/error.hpp"

namespace homcert {

TwoSortedTarget TwoSortedTarget::make(Graph graph, const std::vector<Vertex>& upper,
                                      std::vector<Origin> provenance) {
  const auto n = graph.vertex_count();
  TwoSortedTarget t;
  t.upper = VertexSet(n);
  for (Vertex v : upper) {
    if (v >= n) throw Error(ErrorCode::invalid_input, "upper vertex " + std::to_string(v) + " out of range");
    t.upper.insert(v);
  }
  t.lower = t.upper.complement();
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex w : graph.neighbors(v)) {
      if (t.upper.contains(v) == t.upper.contains(w)) {
        throw Error(ErrorCode::invalid_input,
                    "target edge {" + std::to_string(v) + "," + std::to_string(w) + "} does not join U and L");
      }
    }
  }
  if (!provenance.empty() && provenance.size() != n) {
    throw Error(ErrorCode::invalid_input, "provenance length does not match vertex count");
  }
  t.graph = std::move(graph);
  t.provenance = std::move(provenance);
  return t;
}

}  // namespace homcert
