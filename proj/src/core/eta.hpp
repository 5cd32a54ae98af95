#pragma once

#include <vector>

#include "core/activities.hpp"
#include "core/graph.hpp"
#include "core/numeric.hpp"

namespace homcert {

/// A cross-complete pair (every vertex of a adjacent to every vertex of b)
/// and its value lambda(a) * mu(b). Empty sets and value 0 when h has no
/// edge or loop.
struct EtaWitness {
  std::vector<Vertex> a;
  std::vector<Vertex> b;
  Rational value;
};

/// eta^(Lambda,M)(h). Only closed pairs (b = C(a), a = C(b)) can be optimal
/// under positive activities, so only those are scored. Ties go to the
/// lexicographically smallest a, then b.
/// Throws Error(cap_exceeded) when |V(h)| exceeds the subset cap.
EtaWitness eta_two_sided(const Graph& h, const ActivitySystem& acts);
EtaWitness eta_one_sided(const Graph& h, const std::vector<Rational>& lambdas);
EtaWitness eta_unweighted(const Graph& h);

}  // namespace homcert
