#include "core/eta.hpp"

#include <string>
#include <tuple>

#include "core/closed_form.hpp"
#include "core/constructions.hpp"
#include "core/error.hpp"

namespace homcert {

EtaWitness eta_two_sided(const Graph& h, const ActivitySystem& acts) {
  const auto k = h.vertex_count();
  if (acts.vertex_count() != k) throw Error(ErrorCode::invalid_input, "activity system size does not match target");
  if (k > kSubsetCap) {
    throw Error(ErrorCode::cap_exceeded, "eta is capped at " + std::to_string(kSubsetCap) + " target vertices");
  }
  const BigCount scale = scale_constant(acts);
  std::vector<BigCount> lambda_scaled, mu_scaled;
  for (const auto& p : acts.pairs()) {
    lambda_scaled.push_back(BigCount(p.lambda.get_num()) * (scale / BigCount(p.lambda.get_den())));
    mu_scaled.push_back(BigCount(p.mu.get_num()) * (scale / BigCount(p.mu.get_den())));
  }

  BigCount best_value = 0;
  std::vector<Vertex> best_a, best_b;
  VertexSet chosen(k);
  BigCount lambda_sum = 0;

  auto common_of = [&](const VertexSet& s) {
    VertexSet common(k, true);
    s.for_each([&](Vertex v) { common &= h.neighbor_set(v); });
    return common;
  };

  auto recurse = [&](auto&& self, Vertex from, const VertexSet& common) -> void {
    for (Vertex v = from; v < k; ++v) {
      VertexSet next = common & h.neighbor_set(v);
      if (next.empty()) continue;
      chosen.insert(v);
      lambda_sum += lambda_scaled[v];
      if (common_of(next) == chosen) {
        BigCount mu_sum = 0;
        next.for_each([&](Vertex j) { mu_sum += mu_scaled[j]; });
        const BigCount value = lambda_sum * mu_sum;
        auto a = chosen.to_vector();
        auto b = next.to_vector();
        if (value > best_value || (value == best_value && std::tie(a, b) < std::tie(best_a, best_b))) {
          best_value = value;
          best_a = std::move(a);
          best_b = std::move(b);
        }
      }
      self(self, v + 1, next);
      lambda_sum -= lambda_scaled[v];
      chosen.erase(v);
    }
  };
  recurse(recurse, 0, VertexSet(k, true));

  EtaWitness w{std::move(best_a), std::move(best_b), Rational(best_value, scale * scale)};
  w.value.canonicalize();
  return w;
}

EtaWitness eta_one_sided(const Graph& h, const std::vector<Rational>& lambdas) {
  return eta_two_sided(h, ActivitySystem::one_sided(lambdas));
}

EtaWitness eta_unweighted(const Graph& h) { return eta_two_sided(h, ActivitySystem::unit(h.vertex_count())); }

}  // namespace homcert
