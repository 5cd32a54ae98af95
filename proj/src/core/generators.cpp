#include "core/generators.hpp"

#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include "core/error.hpp"

namespace homcert {
namespace {

[[noreturn]] void bad_params(const std::string& message) { throw Error(ErrorCode::invalid_input, message); }

std::vector<Vertex> iota_vertices(std::size_t from, std::size_t to) {
  std::vector<Vertex> out;
  for (std::size_t v = from; v < to; ++v) out.push_back(static_cast<Vertex>(v));
  return out;
}

std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

}  // namespace

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// xoshiro256** seeded through splitmix64.
SeededRng::SeededRng(std::uint64_t seed) {
  std::uint64_t s = seed;
  for (auto& word : state_) {
    s += 0x9e3779b97f4a7c15ULL;
    word = splitmix64(s - 0x9e3779b97f4a7c15ULL);
  }
}

std::uint64_t SeededRng::next() {
  const auto result = rotl(state_[1] * 5, 7) * 9;
  const auto t = state_[1] << 17;
  state_[2] ^= state_[0];
  state_[3] ^= state_[1];
  state_[1] ^= state_[2];
  state_[0] ^= state_[3];
  state_[2] ^= t;
  state_[3] = rotl(state_[3], 45);
  return result;
}

std::uint64_t SeededRng::below(std::uint64_t bound) {
  const auto limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return x % bound;
}

BipartiteGraph gen_complete_bipartite(std::size_t a, std::size_t b) {
  if (a < 1 || b < 1) bad_params("complete bipartite sides must be >= 1");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < a; ++i) {
    for (std::size_t j = 0; j < b; ++j) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(a + j));
  }
  return BipartiteGraph::check_bipartition(Graph::from_edges(a + b, edges), iota_vertices(0, a));
}

BipartiteGraph gen_even_cycle(std::size_t length) {
  if (length < 4 || length % 2 != 0) bad_params("cycle length must be even and >= 4");
  std::vector<Edge> edges;
  std::vector<Vertex> class_e;
  for (std::size_t i = 0; i < length; ++i) {
    edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % length));
    if (i % 2 == 0) class_e.push_back(static_cast<Vertex>(i));
  }
  return BipartiteGraph::check_bipartition(Graph::from_edges(length, edges), class_e);
}

BipartiteGraph gen_hypercube(std::size_t d) {
  if (d < 1 || d > 20) bad_params("hypercube dimension must be in [1, 20]");
  const std::size_t n = std::size_t{1} << d;
  std::vector<Edge> edges;
  std::vector<Vertex> class_e;
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t bit = 0; bit < d; ++bit) {
      const auto w = v ^ (std::size_t{1} << bit);
      if (v < w) edges.emplace_back(static_cast<Vertex>(v), static_cast<Vertex>(w));
    }
    if (std::popcount(v) % 2 == 0) class_e.push_back(static_cast<Vertex>(v));
  }
  return BipartiteGraph::check_bipartition(Graph::from_edges(n, edges), class_e);
}

BipartiteGraph gen_union(std::span<const BipartiteGraph> parts) {
  std::vector<Edge> edges;
  std::vector<Vertex> class_e;
  Vertex offset = 0;
  for (const auto& part : parts) {
    for (const auto& [u, v] : part.graph().edges()) edges.emplace_back(u + offset, v + offset);
    for (Vertex v : part.class_e()) class_e.push_back(v + offset);
    offset += static_cast<Vertex>(part.vertex_count());
  }
  return BipartiteGraph::check_bipartition(Graph::from_edges(offset, edges), class_e);
}

BipartiteGraph gen_random_regular_bipartite(std::size_t n, std::size_t half, std::uint64_t seed) {
  if (n < 1 || n > half) bad_params("random regular bipartite needs 1 <= n <= half");
  if (n == half) return gen_complete_bipartite(half, half);
  SeededRng rng(seed);
  std::vector<Vertex> perm(half);
  for (int attempt = 0; attempt < kRandomRegularMaxAttempts; ++attempt) {
    std::set<Edge> edges;
    bool simple = true;
    for (std::size_t k = 0; k < n && simple; ++k) {
      std::iota(perm.begin(), perm.end(), Vertex{0});
      for (std::size_t i = half - 1; i > 0; --i) std::swap(perm[i], perm[rng.below(i + 1)]);
      for (std::size_t i = 0; i < half && simple; ++i) {
        simple = edges.emplace(static_cast<Vertex>(i), static_cast<Vertex>(half + perm[i])).second;
      }
    }
    if (simple) {
      const std::vector<Edge> list(edges.begin(), edges.end());
      return BipartiteGraph::check_bipartition(Graph::from_edges(2 * half, list), iota_vertices(0, half));
    }
  }
  throw Error(ErrorCode::generator_exhausted, "no simple " + std::to_string(n) + "-regular sample on 2*" +
                                                  std::to_string(half) + " vertices after " +
                                                  std::to_string(kRandomRegularMaxAttempts) + " attempts");
}

bool InstanceSpec::is_random() const {
  if (family == Family::random_regular) return true;
  for (const auto& p : parts) {
    if (p.is_random()) return true;
  }
  return false;
}

namespace {

std::size_t size_param(const Json& doc, const char* key) {
  if (!doc.contains(key)) bad_params(std::string("instance spec missing \"") + key + "\"");
  const auto& v = doc.at(key);
  if (!v.is_number_integer() || v.get<std::int64_t>() < 0) {
    bad_params(std::string("\"") + key + "\" must be a nonnegative integer");
  }
  return v.get<std::size_t>();
}

void only_keys(const Json& doc, std::initializer_list<std::string_view> allowed) {
  for (const auto& [key, _] : doc.items()) {
    if (key == "family") continue;
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      bad_params("unknown instance spec key '" + key + "'");
    }
  }
}

}  // namespace

InstanceSpec parse_instance_spec(const Json& doc) {
  if (!doc.is_object() || !doc.contains("family") || !doc.at("family").is_string()) {
    bad_params("instance spec needs a \"family\" string");
  }
  const auto family = doc.at("family").get<std::string>();
  InstanceSpec spec;
  if (family == "complete-bipartite") {
    only_keys(doc, {"a", "b"});
    spec.family = InstanceSpec::Family::complete_bipartite;
    spec.a = size_param(doc, "a");
    spec.b = size_param(doc, "b");
  } else if (family == "cycle") {
    only_keys(doc, {"length"});
    spec.family = InstanceSpec::Family::cycle;
    spec.length = size_param(doc, "length");
  } else if (family == "hypercube") {
    only_keys(doc, {"d"});
    spec.family = InstanceSpec::Family::hypercube;
    spec.dimension = size_param(doc, "d");
  } else if (family == "random-regular") {
    only_keys(doc, {"n", "half", "seed"});
    spec.family = InstanceSpec::Family::random_regular;
    spec.degree = size_param(doc, "n");
    spec.half = size_param(doc, "half");
    if (doc.contains("seed")) {
      if (!doc.at("seed").is_number_unsigned()) bad_params("\"seed\" must be a nonnegative integer");
      spec.seed = doc.at("seed").get<std::uint64_t>();
    }
  } else if (family == "union") {
    only_keys(doc, {"parts"});
    spec.family = InstanceSpec::Family::union_of;
    if (!doc.contains("parts") || !doc.at("parts").is_array()) bad_params("union needs a \"parts\" array");
    for (const auto& part : doc.at("parts")) spec.parts.push_back(parse_instance_spec(part));
  } else if (family == "file") {
    only_keys(doc, {"path", "graph"});
    spec.family = InstanceSpec::Family::file;
    if (doc.contains("path") == doc.contains("graph")) bad_params("file instance needs exactly one of path/graph");
    if (doc.contains("path")) {
      if (!doc.at("path").is_string()) bad_params("\"path\" must be a string");
      spec.path = doc.at("path").get<std::string>();
    } else {
      spec.inline_graph = doc.at("graph");
    }
  } else {
    bad_params("unknown instance family '" + family + "'");
  }
  return spec;
}

Json to_json(const InstanceSpec& spec) {
  using F = InstanceSpec::Family;
  switch (spec.family) {
    case F::complete_bipartite: return {{"family", "complete-bipartite"}, {"a", spec.a}, {"b", spec.b}};
    case F::cycle: return {{"family", "cycle"}, {"length", spec.length}};
    case F::hypercube: return {{"family", "hypercube"}, {"d", spec.dimension}};
    case F::random_regular:
      return {{"family", "random-regular"}, {"n", spec.degree}, {"half", spec.half}, {"seed", spec.seed}};
    case F::union_of: {
      Json parts = Json::array();
      for (const auto& p : spec.parts) parts.push_back(to_json(p));
      return {{"family", "union"}, {"parts", std::move(parts)}};
    }
    case F::file:
      if (spec.inline_graph) return {{"family", "file"}, {"graph", *spec.inline_graph}};
      return {{"family", "file"}, {"path", spec.path}};
  }
  return {};
}

Instance build_instance(const InstanceSpec& spec, const std::filesystem::path& base_dir) {
  using F = InstanceSpec::Family;
  auto from_bipartite = [](BipartiteGraph b) {
    Instance inst{b.graph(), std::move(b)};
    return inst;
  };
  switch (spec.family) {
    case F::complete_bipartite: return from_bipartite(gen_complete_bipartite(spec.a, spec.b));
    case F::cycle: return from_bipartite(gen_even_cycle(spec.length));
    case F::hypercube: return from_bipartite(gen_hypercube(spec.dimension));
    case F::random_regular:
      return from_bipartite(gen_random_regular_bipartite(spec.degree, spec.half, spec.seed));
    case F::union_of: {
      std::vector<BipartiteGraph> parts;
      for (const auto& p : spec.parts) {
        auto inst = build_instance(p, base_dir);
        if (!inst.bipartite) bad_params("union parts must be bipartite");
        parts.push_back(std::move(*inst.bipartite));
      }
      return from_bipartite(gen_union(parts));
    }
    case F::file: {
      Json doc;
      std::filesystem::path file_dir = base_dir;
      if (spec.inline_graph) {
        doc = *spec.inline_graph;
      } else {
        const auto path = std::filesystem::path(spec.path).is_absolute() ? std::filesystem::path(spec.path)
                                                                          : base_dir / spec.path;
        std::ifstream in(path);
        if (!in) bad_params("cannot read graph file " + path.string());
        std::ostringstream text;
        text << in.rdbuf();
        doc = parse_json(text.str());
        file_dir = path.parent_path();
      }
      // A file may hold an instance spec instead of an explicit graph.
      if (doc.is_object() && doc.contains("family")) return build_instance(parse_instance_spec(doc), file_dir);
      auto parsed = parse_graph_document(doc);
      if (parsed.class_e) {
        return from_bipartite(BipartiteGraph::check_bipartition(std::move(parsed.graph), *parsed.class_e));
      }
      return Instance{std::move(parsed.graph), std::nullopt};
    }
  }
  bad_params("unhandled instance family");
}

}  // namespace homcert
