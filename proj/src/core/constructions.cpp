#include "core/constructions.hpp"

#include "core/error.hpp"

namespace homcert {

TwoSortedTarget double_graph(const Graph& h) {
  const auto k = static_cast<Vertex>(h.vertex_count());
  std::vector<Edge> edges;
  for (Vertex i = 0; i < k; ++i) {
    for (Vertex j : h.neighbors(i)) edges.emplace_back(i, k + j);
  }
  std::vector<Vertex> upper;
  std::vector<Origin> provenance;
  for (Vertex i = 0; i < k; ++i) {
    upper.push_back(i);
    provenance.push_back({i, Side::upper, 0});
  }
  for (Vertex i = 0; i < k; ++i) provenance.push_back({i, Side::lower, 0});
  return TwoSortedTarget::make(Graph::from_edges(2 * std::size_t{k}, edges), upper, std::move(provenance));
}

BigCount scale_constant(const ActivitySystem& acts) {
  BigCount c = 1;
  for (const auto& p : acts.pairs()) {
    c = lcm(c, BigCount(p.lambda.get_den()));
    c = lcm(c, BigCount(p.mu.get_den()));
  }
  return c;
}

std::pair<TwoSortedTarget, BlowupMeta> blowup(const Graph& h, const ActivitySystem& acts) {
  if (acts.vertex_count() != h.vertex_count()) {
    throw Error(ErrorCode::invalid_input, "activity system size does not match target");
  }
  BlowupMeta meta;
  meta.scale = scale_constant(acts);
  BigCount total = 0;
  auto copies = [&](const Rational& activity) {
    const BigCount count = BigCount(activity.get_num()) * (meta.scale / BigCount(activity.get_den()));
    total += count;
    if (total > kMaxBlowupVertices) throw Error(ErrorCode::cap_exceeded, "blow-up exceeds vertex cap");
    return static_cast<std::size_t>(count.get_ui());
  };
  for (const auto& p : acts.pairs()) meta.upper_copies.push_back(copies(p.lambda));
  for (const auto& p : acts.pairs()) meta.lower_copies.push_back(copies(p.mu));

  const auto k = h.vertex_count();
  std::vector<Vertex> upper_first(k), lower_first(k);
  std::vector<Origin> provenance;
  Vertex next = 0;
  for (Vertex i = 0; i < k; ++i) {
    upper_first[i] = next;
    for (std::uint32_t c = 0; c < meta.upper_copies[i]; ++c, ++next) provenance.push_back({i, Side::upper, c});
  }
  const Vertex upper_end = next;
  for (Vertex i = 0; i < k; ++i) {
    lower_first[i] = next;
    for (std::uint32_t c = 0; c < meta.lower_copies[i]; ++c, ++next) provenance.push_back({i, Side::lower, c});
  }

  std::vector<Edge> edges;
  for (Vertex i = 0; i < k; ++i) {
    for (Vertex j : h.neighbors(i)) {
      for (std::size_t a = 0; a < meta.upper_copies[i]; ++a) {
        for (std::size_t b = 0; b < meta.lower_copies[j]; ++b) {
          edges.emplace_back(upper_first[i] + static_cast<Vertex>(a), lower_first[j] + static_cast<Vertex>(b));
        }
      }
    }
  }
  std::vector<Vertex> upper;
  for (Vertex v = 0; v < upper_end; ++v) upper.push_back(v);
  auto target = TwoSortedTarget::make(Graph::from_edges(next, edges), upper, std::move(provenance));
  return {std::move(target), std::move(meta)};
}

}  // namespace homcert
