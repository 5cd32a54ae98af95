#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "core/numeric.hpp"
#include "core/vertex_set.hpp"

namespace homcert {

struct ActivityPair {
  Rational lambda{1};
  Rational mu{1};

  bool operator==(const ActivityPair&) const = default;
};

/// Strictly positive (lambda_i, mu_i) for every vertex of a target graph.
/// lambda weighs images of E-class vertices, mu images of O-class vertices.
class ActivitySystem {
 public:
  ActivitySystem() = default;

  static ActivitySystem unit(std::size_t vertex_count);
  /// Throws Error(invalid_input) if any activity is not strictly positive.
  static ActivitySystem from_pairs(std::vector<ActivityPair> pairs);
  /// One-sided system: lambda_i = mu_i.
  static ActivitySystem one_sided(const std::vector<Rational>& lambdas);

  std::size_t vertex_count() const noexcept { return pairs_.size(); }
  const Rational& lambda(Vertex v) const { return pairs_[v].lambda; }
  const Rational& mu(Vertex v) const { return pairs_[v].mu; }
  const std::vector<ActivityPair>& pairs() const noexcept { return pairs_; }

  bool is_unit() const;
  bool is_one_sided() const;
  /// lambda and mu exchanged at every vertex.
  ActivitySystem swapped() const;

  bool operator==(const ActivitySystem&) const = default;

 private:
  std::vector<ActivityPair> pairs_;
};

/// Activities as written in a file: sparse per-vertex overrides, or one
/// uniform pair. Vertices without an entry default to 1/1.
struct ActivitySpec {
  std::map<Vertex, ActivityPair> per_vertex;
  std::optional<ActivityPair> uniform;

  /// Throws Error(invalid_input) if an entry names a vertex >= vertex_count.
  ActivitySystem resolve(std::size_t vertex_count) const;
};

}  // namespace homcert
