#include "core/closed_form.hpp"

#include <bit>
#include <string>
#include <vector>

#include "core/constructions.hpp"
#include "core/error.hpp"

namespace homcert {

BigCount surjection_count(std::size_t n, std::size_t a) {
  BigCount total = 0;
  BigCount binom = 1;  // C(a, i)
  for (std::size_t i = 0; i <= a; ++i) {
    const BigCount term = binom * pow(BigCount(static_cast<unsigned long>(a - i)), n);
    if (i % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
    binom = binom * static_cast<unsigned long>(a - i) / static_cast<unsigned long>(i + 1);
  }
  return total;
}

namespace {

void check_cap(std::size_t size, const char* what) {
  if (size > kSubsetCap) {
    throw Error(ErrorCode::cap_exceeded, std::string(what) + " has " + std::to_string(size) +
                                             " vertices; subset enumeration is capped at " +
                                             std::to_string(kSubsetCap));
  }
}

// Visits every nonempty A drawn from `pool` (in increasing order) with
// |A| <= max_size and nonempty common neighbourhood C(A) within `universe`.
template <typename Visit>
void for_each_subset(const Graph& g, const std::vector<Vertex>& pool, std::size_t max_size,
                     const VertexSet& universe, Budget& budget, Visit&& visit) {
  std::vector<Vertex> chosen;
  auto recurse = [&](auto&& self, std::size_t from, const VertexSet& common) -> void {
    for (std::size_t k = from; k < pool.size(); ++k) {
      budget.charge();
      VertexSet next = common & g.neighbor_set(pool[k]);
      if (next.empty()) continue;
      chosen.push_back(pool[k]);
      visit(chosen, next);
      if (chosen.size() < max_size) self(self, k + 1, next);
      chosen.pop_back();
    }
  };
  recurse(recurse, 0, universe);
}

}  // namespace

BigCount knn_restricted_count(std::size_t n, const TwoSortedTarget& target, Budget& budget) {
  if (n < 1) throw Error(ErrorCode::invalid_input, "K_{n,n} needs n >= 1");
  const auto lower = target.lower.to_vector();
  check_cap(lower.size(), "L");
  std::vector<BigCount> surj;
  for (std::size_t k = 0; k <= std::min(n, lower.size()); ++k) surj.push_back(surjection_count(n, k));
  BigCount total = 0;
  for_each_subset(target.graph, lower, n, target.upper, budget,
                  [&](const std::vector<Vertex>& a, const VertexSet& common_upper) {
                    total += surj[a.size()] * pow(BigCount(static_cast<unsigned long>(common_upper.size())), n);
                  });
  return total;
}

Rational kab_partition(std::size_t a, std::size_t b, const Graph& h, const ActivitySystem& acts, Budget& budget) {
  if (a < 1 || b < 1) throw Error(ErrorCode::invalid_input, "K_{a,b} needs a, b >= 1");
  if (acts.vertex_count() != h.vertex_count()) {
    throw Error(ErrorCode::invalid_input, "activity system size does not match target");
  }
  check_cap(h.vertex_count(), "target");
  const BigCount scale = scale_constant(acts);
  std::vector<BigCount> lambda_scaled, mu_scaled;
  for (const auto& p : acts.pairs()) {
    lambda_scaled.push_back(BigCount(p.lambda.get_num()) * (scale / BigCount(p.lambda.get_den())));
    mu_scaled.push_back(BigCount(p.mu.get_num()) * (scale / BigCount(p.mu.get_den())));
  }

  std::vector<Vertex> all(h.vertex_count());
  for (Vertex v = 0; v < all.size(); ++v) all[v] = v;

  BigCount total = 0;
  for_each_subset(h, all, b, VertexSet(h.vertex_count(), true), budget,
                  [&](const std::vector<Vertex>& image, const VertexSet& common) {
                    // Weighted surjections of the b O-vertices onto `image`:
                    // sum over sub-images S of (-1)^{|image|-|S|} mu(S)^b.
                    BigCount surj = 0;
                    const std::size_t k = image.size();
                    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
                      BigCount mu_sum = 0;
                      for (std::size_t t = 0; t < k; ++t) {
                        if ((mask >> t) & 1U) mu_sum += mu_scaled[image[t]];
                      }
                      const BigCount term = pow(mu_sum, b);
                      if ((k - static_cast<std::size_t>(std::popcount(mask))) % 2 == 0) {
                        surj += term;
                      } else {
                        surj -= term;
                      }
                    }
                    BigCount lambda_sum = 0;
                    common.for_each([&](Vertex j) { lambda_sum += lambda_scaled[j]; });
                    total += surj * pow(lambda_sum, a);
                  });
  Rational z(total, pow(scale, a + b));
  z.canonicalize();
  return z;
}

Rational knn_partition(std::size_t n, const Graph& h, const ActivitySystem& acts, Budget& budget) {
  return kab_partition(n, n, h, acts, budget);
}

}  // namespace homcert
