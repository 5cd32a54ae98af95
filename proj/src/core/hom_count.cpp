#include "core/hom_count.hpp"

#include <algorithm>
#include <optional>
#include <string>

#include "core/constructions.hpp"
#include "core/error.hpp"

namespace homcert {

void Budget::charge(std::uint64_t nodes) {
  if (limit_ - used_ < nodes) {
    used_ = limit_;
    throw Error(ErrorCode::budget_exceeded, "node budget of " + std::to_string(limit_) + " exhausted");
  }
  used_ += nodes;
}

namespace {

using WeightTable = std::vector<BigCount>;

// Per-source-vertex candidate sets and weight tables (nullptr = unit).
struct SearchInput {
  const Graph& source;
  const Graph& target;
  std::vector<VertexSet> initial;
  std::vector<const WeightTable*> weights;
};

struct Step {
  Vertex vertex;
  bool free;                          // no neighbour later in the order
  std::vector<std::size_t> earlier;   // positions of already-placed neighbours
};

// Greedy max-degree vertex cover of one component, placed so each cover
// vertex touches as much of the placed region as possible; every non-cover
// vertex goes in right after its last neighbour.
std::vector<Step> plan_order(const Graph& g, const std::vector<Vertex>& component) {
  const auto n = g.vertex_count();
  auto proper_neighbors = [&](Vertex v) {
    std::vector<Vertex> out;
    for (Vertex w : g.neighbors(v)) {
      if (w != v) out.push_back(w);
    }
    return out;
  };

  std::vector<bool> in_cover(n, false);
  std::vector<std::size_t> uncovered(n, 0);
  for (Vertex v : component) uncovered[v] = proper_neighbors(v).size();
  while (true) {
    Vertex best = 0;
    std::size_t best_deg = 0;
    for (Vertex v : component) {
      if (!in_cover[v] && uncovered[v] > best_deg) {
        best = v;
        best_deg = uncovered[v];
      }
    }
    if (best_deg == 0) break;
    in_cover[best] = true;
    for (Vertex w : proper_neighbors(best)) {
      if (!in_cover[w]) --uncovered[w];
    }
    uncovered[best] = 0;
  }

  std::vector<Vertex> order;
  std::vector<bool> placed(n, false);
  std::vector<std::size_t> placed_neighbors(n, 0);
  auto place = [&](Vertex v) {
    order.push_back(v);
    placed[v] = true;
    for (Vertex w : proper_neighbors(v)) ++placed_neighbors[w];
  };
  auto flush_completed = [&] {
    for (Vertex v : component) {
      if (!placed[v] && !in_cover[v] && placed_neighbors[v] == proper_neighbors(v).size()) place(v);
    }
  };
  flush_completed();
  while (true) {
    std::optional<Vertex> best;
    std::pair<std::size_t, std::size_t> best_score{0, 0};
    for (Vertex v : component) {
      if (placed[v] || !in_cover[v]) continue;
      std::size_t touching = 0;
      for (Vertex w : proper_neighbors(v)) {
        if (!placed[w] && placed_neighbors[w] > 0) ++touching;
      }
      const std::pair score{placed_neighbors[v] + touching, proper_neighbors(v).size()};
      if (!best || score > best_score) {
        best = v;
        best_score = score;
      }
    }
    if (!best) break;
    place(*best);
    flush_completed();
  }

  std::vector<std::size_t> position(n, 0);
  for (std::size_t i = 0; i < order.size(); ++i) position[order[i]] = i;
  std::vector<Step> steps;
  for (std::size_t i = 0; i < order.size(); ++i) {
    Step s{order[i], true, {}};
    for (Vertex w : proper_neighbors(order[i])) {
      if (position[w] < i) s.earlier.push_back(position[w]);
      if (position[w] > i) s.free = false;
    }
    steps.push_back(std::move(s));
  }
  return steps;
}

class Search {
 public:
  Search(const SearchInput& input, std::vector<Step> steps, Budget& budget)
      : in_(input), steps_(std::move(steps)), budget_(budget), image_(steps_.size(), 0) {}

  BigCount run() {
    total_ = 0;
    descend(0, BigCount(1));
    return total_;
  }

 private:
  BigCount weight_sum(const VertexSet& cand, const WeightTable* table) const {
    if (table == nullptr) return BigCount(static_cast<unsigned long>(cand.size()));
    BigCount sum = 0;
    cand.for_each([&](Vertex i) { sum += (*table)[i]; });
    return sum;
  }

  void descend(std::size_t pos, const BigCount& product) {
    if (pos == steps_.size()) {
      total_ += product;
      return;
    }
    const auto& step = steps_[pos];
    VertexSet cand = in_.initial[step.vertex];
    for (std::size_t p : step.earlier) cand &= in_.target.neighbor_set(image_[p]);
    const WeightTable* table = in_.weights[step.vertex];
    if (step.free) {
      budget_.charge();
      const auto factor = weight_sum(cand, table);
      if (factor != 0) descend(pos + 1, product * factor);
      return;
    }
    cand.for_each([&](Vertex i) {
      budget_.charge();
      image_[pos] = i;
      if (table == nullptr) {
        descend(pos + 1, product);
      } else {
        descend(pos + 1, product * (*table)[i]);
      }
    });
  }

  const SearchInput& in_;
  std::vector<Step> steps_;
  Budget& budget_;
  std::vector<Vertex> image_;
  BigCount total_;
};

BigCount run_search(SearchInput& input, Budget& budget) {
  const auto& g = input.source;
  VertexSet looped(input.target.vertex_count());
  for (Vertex i : input.target.loops()) looped.insert(i);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.has_loop(v)) input.initial[v] &= looped;
  }
  BigCount result = 1;
  for (const auto& component : g.components()) {
    Search search(input, plan_order(g, component), budget);
    result *= search.run();
    if (result == 0) break;
  }
  return result;
}

}  // namespace

BigCount count_homs(const Graph& g, const Graph& h, Budget& budget) {
  SearchInput input{g, h, std::vector<VertexSet>(g.vertex_count(), VertexSet(h.vertex_count(), true)),
                    std::vector<const WeightTable*>(g.vertex_count(), nullptr)};
  return run_search(input, budget);
}

BigCount count_homs_restricted(const BipartiteGraph& g, const TwoSortedTarget& target, Budget& budget) {
  SearchInput input{g.graph(), target.graph, {}, std::vector<const WeightTable*>(g.vertex_count(), nullptr)};
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    input.initial.push_back(g.in_class_e(v) ? target.upper : target.lower);
  }
  return run_search(input, budget);
}

Rational partition_fn(const BipartiteGraph& g, const Graph& h, const ActivitySystem& acts, Budget& budget) {
  if (acts.vertex_count() != h.vertex_count()) {
    throw Error(ErrorCode::invalid_input, "activity system size does not match target");
  }
  // Scale every activity by C so the search multiplies integers only.
  const BigCount scale = scale_constant(acts);
  WeightTable lambda_scaled, mu_scaled;
  for (const auto& p : acts.pairs()) {
    lambda_scaled.push_back(BigCount(p.lambda.get_num()) * (scale / BigCount(p.lambda.get_den())));
    mu_scaled.push_back(BigCount(p.mu.get_num()) * (scale / BigCount(p.mu.get_den())));
  }
  SearchInput input{g.graph(), h, std::vector<VertexSet>(g.vertex_count(), VertexSet(h.vertex_count(), true)), {}};
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    input.weights.push_back(g.in_class_e(v) ? &lambda_scaled : &mu_scaled);
  }
  const BigCount scaled_total = run_search(input, budget);
  Rational z(scaled_total, pow(scale, g.vertex_count()));
  z.canonicalize();
  return z;
}

namespace {

void count_sets(const Graph& g, Vertex v, VertexSet& blocked, BigCount& total, Budget& budget) {
  budget.charge();
  if (v == g.vertex_count()) {
    ++total;
    return;
  }
  count_sets(g, v + 1, blocked, total, budget);
  if (blocked.contains(v) || g.has_loop(v)) return;
  // Only later vertices matter, so blocking is undone by restoring a copy.
  const VertexSet saved = blocked;
  blocked |= g.neighbor_set(v);
  count_sets(g, v + 1, blocked, total, budget);
  blocked = saved;
}

}  // namespace

BigCount count_independent_sets(const Graph& g, Budget& budget) {
  BigCount total = 0;
  VertexSet blocked(g.vertex_count());
  count_sets(g, 0, blocked, total, budget);
  return total;
}

}  // namespace homcert
