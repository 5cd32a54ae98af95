#pragma once

#include <vector>

#include "core/activities.hpp"
#include "core/graph.hpp"
#include "core/numeric.hpp"
#include "core/target.hpp"

namespace homcert {

/// Bipartite double H': U = {v_i} (vertices 0..k-1), L = {w_i} (k..2k-1),
/// v_i ~ w_j iff i ~ j in H. A loop at i becomes the edge v_i w_i.
TwoSortedTarget double_graph(const Graph& h);

/// Least positive C with C*lambda_i and C*mu_i integral for every i.
BigCount scale_constant(const ActivitySystem& acts);

struct BlowupMeta {
  BigCount scale;
  std::vector<std::size_t> upper_copies;  // C*lambda_i
  std::vector<std::size_t> lower_copies;  // C*mu_i
};

inline constexpr std::size_t kMaxBlowupVertices = 1'000'000;

/// H^(Lambda,M): C*lambda_i upper copies and C*mu_i lower copies of each i,
/// numbered origin by origin (all upper copies first, then all lower
/// copies); an upper copy of i and a lower copy of j are joined iff i ~ j.
/// Throws Error(cap_exceeded) past kMaxBlowupVertices.
std::pair<TwoSortedTarget, BlowupMeta> blowup(const Graph& h, const ActivitySystem& acts);

}  // namespace homcert
