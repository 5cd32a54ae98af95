#pragma once

#include <cstddef>

#include "core/activities.hpp"
#include "core/graph.hpp"
#include "core/hom_count.hpp"
#include "core/numeric.hpp"
#include "core/target.hpp"

namespace homcert {

inline constexpr std::size_t kSubsetCap = 24;

/// Number of surjections from an n-set onto an a-set, by inclusion-exclusion.
BigCount surjection_count(std::size_t n, std::size_t a);

/// |Hom^{U,L}(K_{n,n}, target)| = sum over A subset of L of
/// |T(A)| * |C^U(A)|^n, where T(A) are the surjections [n] -> A and C^U(A)
/// the common U-neighbours of A. Each subset term visited is charged to the
/// budget. Throws Error(cap_exceeded) when |L| > kSubsetCap.
BigCount knn_restricted_count(std::size_t n, const TwoSortedTarget& target, Budget& budget);

/// Z^(Lambda,M)(K_{a,b}, h) with the a-vertex side as class E (carrying
/// lambda) and the b-vertex side as class O (carrying mu). Sums, over the
/// image A of the O-side, the mu-weighted surjection total times
/// (lambda(C(A)))^a. Throws Error(cap_exceeded) when |V(h)| > kSubsetCap.
Rational kab_partition(std::size_t a, std::size_t b, const Graph& h, const ActivitySystem& acts, Budget& budget);

/// Z^(Lambda,M)(K_{n,n}, h).
Rational knn_partition(std::size_t n, const Graph& h, const ActivitySystem& acts, Budget& budget);

}  // namespace homcert
