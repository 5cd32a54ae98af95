#include "core/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <set>

#include "core/error.hpp"

namespace homcert {
namespace {

[[noreturn]] void fail(const std::string& message) { throw Error(ErrorCode::invalid_input, message); }

std::uint64_t as_index(const Json& value, const char* what) {
  if (!value.is_number_integer() || (value.is_number_integer() && value.get<std::int64_t>() < 0)) {
    fail(std::string(what) + " must be a nonnegative integer");
  }
  const auto v = value.get<std::uint64_t>();
  if (v > 0xffffffffULL) fail(std::string(what) + " too large");
  return v;
}

std::vector<Vertex> as_vertex_list(const Json& value, const char* what) {
  if (!value.is_array()) fail(std::string(what) + " must be an array");
  std::vector<Vertex> out;
  for (const auto& item : value) out.push_back(static_cast<Vertex>(as_index(item, what)));
  return out;
}

void check_keys(const Json& doc, std::initializer_list<std::string_view> allowed) {
  if (!doc.is_object()) fail("expected a JSON object");
  for (const auto& [key, _] : doc.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) fail("unknown key '" + key + "'");
  }
}

Rational as_activity(const Json& value) {
  if (value.is_string()) return parse_rational(value.get<std::string>());
  if (value.is_number_integer()) return Rational(value.get<long>());
  fail("activities must be \"p/q\" strings or integers");
}

ActivityPair parse_pair(const Json& entry) {
  check_keys(entry, {"lambda", "mu"});
  if (!entry.contains("lambda")) fail("activity entry needs \"lambda\"");
  ActivityPair pair;
  pair.lambda = as_activity(entry.at("lambda"));
  pair.mu = entry.contains("mu") ? as_activity(entry.at("mu")) : pair.lambda;
  if (sgn(pair.lambda) <= 0 || sgn(pair.mu) <= 0) fail("activities must be positive");
  return pair;
}

const char* side_name(Side s) { return s == Side::upper ? "U" : "L"; }

}  // namespace

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    fail(std::string("malformed JSON: ") + e.what());
  }
}

GraphDocument parse_graph_document(const Json& doc) {
  // "scale" is informational output of the blow-up and is not read back.
  check_keys(doc, {"vertices", "edges", "loops", "class_e", "upper", "provenance", "scale"});
  if (!doc.contains("vertices")) fail("graph needs \"vertices\"");
  const auto n = as_index(doc.at("vertices"), "vertices");
  std::vector<Edge> edges;
  if (doc.contains("edges")) {
    if (!doc.at("edges").is_array()) fail("\"edges\" must be an array");
    for (const auto& e : doc.at("edges")) {
      if (!e.is_array() || e.size() != 2) fail("each edge must be a pair [u, v]");
      const auto u = static_cast<Vertex>(as_index(e[0], "edge endpoint"));
      const auto v = static_cast<Vertex>(as_index(e[1], "edge endpoint"));
      if (u == v) fail("self-pair [" + std::to_string(u) + "," + std::to_string(u) + "] in edges; use \"loops\"");
      edges.emplace_back(u, v);
    }
  }
  std::vector<Vertex> loops;
  if (doc.contains("loops")) loops = as_vertex_list(doc.at("loops"), "loop vertex");

  GraphDocument out;
  out.graph = Graph::from_edges(n, edges, loops);
  if (doc.contains("class_e")) out.class_e = as_vertex_list(doc.at("class_e"), "class_e vertex");
  if (doc.contains("upper")) out.upper = as_vertex_list(doc.at("upper"), "upper vertex");
  if (doc.contains("provenance")) {
    const auto& prov = doc.at("provenance");
    if (!prov.is_array()) fail("\"provenance\" must be an array");
    for (const auto& item : prov) {
      if (!item.is_array() || item.size() != 3 || !item[1].is_string()) {
        fail("provenance entries are [origin, \"U\"|\"L\", copy]");
      }
      const auto side = item[1].get<std::string>();
      if (side != "U" && side != "L") fail("provenance side must be \"U\" or \"L\"");
      out.provenance.push_back({static_cast<Vertex>(as_index(item[0], "origin")),
                                side == "U" ? Side::upper : Side::lower,
                                static_cast<std::uint32_t>(as_index(item[2], "copy"))});
    }
  }
  return out;
}

Graph parse_graph(std::string_view text) { return parse_graph_document(parse_json(text)).graph; }

BipartiteGraph bipartite_from_json(const Json& doc) {
  auto parsed = parse_graph_document(doc);
  if (!parsed.class_e) fail("bipartite graph needs \"class_e\"");
  return BipartiteGraph::check_bipartition(std::move(parsed.graph), *parsed.class_e);
}

BipartiteGraph parse_bipartite(std::string_view text) { return bipartite_from_json(parse_json(text)); }

TwoSortedTarget parse_target(std::string_view text) {
  auto parsed = parse_graph_document(parse_json(text));
  if (!parsed.upper) fail("two-sorted target needs \"upper\"");
  return TwoSortedTarget::make(std::move(parsed.graph), *parsed.upper, std::move(parsed.provenance));
}

ActivitySpec activities_from_json(const Json& doc) {
  check_keys(doc, {"activities", "uniform"});
  ActivitySpec spec;
  if (doc.contains("uniform")) spec.uniform = parse_pair(doc.at("uniform"));
  if (doc.contains("activities")) {
    const auto& table = doc.at("activities");
    if (!table.is_object()) fail("\"activities\" must be an object keyed by vertex");
    for (const auto& [key, entry] : table.items()) {
      Vertex v = 0;
      const auto* end = key.data() + key.size();
      auto [ptr, ec] = std::from_chars(key.data(), end, v);
      if (ec != std::errc{} || ptr != end || key.empty()) fail("activity key '" + key + "' is not a vertex index");
      spec.per_vertex[v] = parse_pair(entry);
    }
  }
  return spec;
}

ActivitySpec parse_activities(std::string_view text) { return activities_from_json(parse_json(text)); }

Json to_json(const Graph& g) {
  Json edges = Json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  return Json{{"vertices", g.vertex_count()}, {"edges", std::move(edges)}, {"loops", g.loops()}};
}

Json to_json(const BipartiteGraph& g) {
  auto doc = to_json(g.graph());
  doc["class_e"] = g.class_e();
  return doc;
}

Json to_json(const TwoSortedTarget& t) {
  auto doc = to_json(t.graph);
  doc["upper"] = t.upper.to_vector();
  if (!t.provenance.empty()) {
    Json prov = Json::array();
    for (const auto& o : t.provenance) prov.push_back({o.vertex, side_name(o.side), o.copy});
    doc["provenance"] = std::move(prov);
  }
  return doc;
}

Json to_json(const ActivitySystem& acts) {
  Json table = Json::object();
  for (Vertex v = 0; v < acts.vertex_count(); ++v) {
    table[std::to_string(v)] = {{"lambda", to_string(acts.lambda(v))}, {"mu", to_string(acts.mu(v))}};
  }
  return Json{{"activities", std::move(table)}};
}

std::string dump(const Json& doc) { return doc.dump(); }

}  // namespace homcert
