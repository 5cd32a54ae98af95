#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "core/graph.hpp"
#include "core/graph_io.hpp"

namespace homcert {

/// K_{a,b}; class E is the a-side (vertices 0..a-1).
BipartiteGraph gen_complete_bipartite(std::size_t a, std::size_t b);
/// C_length with E = even indices. length must be even and >= 4.
BipartiteGraph gen_even_cycle(std::size_t length);
/// Q_d on 2^d vertices, E = even-parity vertices.
BipartiteGraph gen_hypercube(std::size_t d);
/// Disjoint union, vertex ranges concatenated in order.
BipartiteGraph gen_union(std::span<const BipartiteGraph> parts);

inline constexpr int kRandomRegularMaxAttempts = 10'000;

/// n-regular bipartite graph on 2*half vertices: union of n uniform random
/// perfect matchings between E = [0, half) and O = [half, 2*half), redrawn
/// from scratch until no edge repeats. Deterministic in seed.
BipartiteGraph gen_random_regular_bipartite(std::size_t n, std::size_t half, std::uint64_t seed);

/// Reproducible 64-bit generator with platform-independent bounded draws.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed);
  std::uint64_t next();
  /// Uniform in [0, bound), bound > 0.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::uint64_t state_[4];
};

std::uint64_t splitmix64(std::uint64_t x);

/// Declarative description of a source graph.
struct InstanceSpec {
  enum class Family { complete_bipartite, cycle, hypercube, random_regular, union_of, file };

  Family family = Family::complete_bipartite;
  std::size_t a = 0;
  std::size_t b = 0;
  std::size_t length = 0;
  std::size_t dimension = 0;
  std::size_t degree = 0;
  std::size_t half = 0;
  std::uint64_t seed = 0;
  std::vector<InstanceSpec> parts;
  std::string path;
  std::optional<Json> inline_graph;

  bool is_random() const;
};

/// Parses {"family": "complete-bipartite"|"cycle"|"hypercube"|
/// "random-regular"|"union"|"file", ...params}.
InstanceSpec parse_instance_spec(const Json& doc);
Json to_json(const InstanceSpec& spec);

struct Instance {
  Graph graph;
  /// Present when the instance carries a declared bipartition.
  std::optional<BipartiteGraph> bipartite;
};

/// Relative "file" paths resolve against base_dir.
Instance build_instance(const InstanceSpec& spec, const std::filesystem::path& base_dir = {});

}  // namespace homcert
