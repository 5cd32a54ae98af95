#pragma once

#include <cstdint>

#include "core/activities.hpp"
#include "core/graph.hpp"
#include "core/numeric.hpp"
#include "core/target.hpp"

namespace homcert {

inline constexpr std::uint64_t kDefaultBudget = 500'000'000;

/// Node-expansion allowance for one computation. Not thread-safe; give each
/// concurrent computation its own.
class Budget {
 public:
  explicit Budget(std::uint64_t limit = kDefaultBudget) : limit_(limit) {}

  /// Throws Error(budget_exceeded) once the allowance is spent.
  void charge(std::uint64_t nodes = 1);

  std::uint64_t limit() const noexcept { return limit_; }
  std::uint64_t used() const noexcept { return used_; }

 private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
};

/// |Hom(g, h)|. g may have loops; a looped source vertex must map to a
/// looped target vertex.
BigCount count_homs(const Graph& g, const Graph& h, Budget& budget);

/// |Hom^{U,L}(g, target)|: E-class into U, O-class into L.
BigCount count_homs_restricted(const BipartiteGraph& g, const TwoSortedTarget& target, Budget& budget);

/// Z^(Lambda,M)(g, h): every homomorphism weighted by lambda over images of
/// E-vertices times mu over images of O-vertices.
Rational partition_fn(const BipartiteGraph& g, const Graph& h, const ActivitySystem& acts, Budget& budget);

/// |I(g)| by include/exclude backtracking over vertices. Shares no code with
/// the homomorphism search.
BigCount count_independent_sets(const Graph& g, Budget& budget);

}  // namespace homcert
