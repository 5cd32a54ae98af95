#include "core/activities.hpp"

#include <algorithm>
#include <string>

#include "core/error.hpp"

namespace homcert {

ActivitySystem ActivitySystem::unit(std::size_t vertex_count) {
  ActivitySystem acts;
  acts.pairs_.resize(vertex_count);
  return acts;
}

ActivitySystem ActivitySystem::from_pairs(std::vector<ActivityPair> pairs) {
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (sgn(pairs[i].lambda) <= 0 || sgn(pairs[i].mu) <= 0) {
      throw Error(ErrorCode::invalid_input, "activities at vertex " + std::to_string(i) + " must be positive");
    }
  }
  ActivitySystem acts;
  acts.pairs_ = std::move(pairs);
  return acts;
}

ActivitySystem ActivitySystem::one_sided(const std::vector<Rational>& lambdas) {
  std::vector<ActivityPair> pairs;
  pairs.reserve(lambdas.size());
  for (const auto& l : lambdas) pairs.push_back({l, l});
  return from_pairs(std::move(pairs));
}

bool ActivitySystem::is_unit() const {
  return std::all_of(pairs_.begin(), pairs_.end(),
                     [](const ActivityPair& p) { return p.lambda == 1 && p.mu == 1; });
}

bool ActivitySystem::is_one_sided() const {
  return std::all_of(pairs_.begin(), pairs_.end(), [](const ActivityPair& p) { return p.lambda == p.mu; });
}

ActivitySystem ActivitySystem::swapped() const {
  ActivitySystem acts = *this;
  for (auto& p : acts.pairs_) std::swap(p.lambda, p.mu);
  return acts;
}

ActivitySystem ActivitySpec::resolve(std::size_t vertex_count) const {
  std::vector<ActivityPair> pairs(vertex_count, uniform.value_or(ActivityPair{}));
  for (const auto& [v, pair] : per_vertex) {
    if (v >= vertex_count) {
      throw Error(ErrorCode::invalid_input, "activity for vertex " + std::to_string(v) + " but target has " +
                                                std::to_string(vertex_count) + " vertices");
    }
    pairs[v] = pair;
  }
  return ActivitySystem::from_pairs(std::move(pairs));
}

}  // namespace homcert
