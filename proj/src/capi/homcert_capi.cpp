#include "homcert/homcert.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <optional>
#include <string>

#include "core/campaign.hpp"
#include "core/closed_form.hpp"
#include "core/constructions.hpp"
#include "core/error.hpp"
#include "core/eta.hpp"
#include "core/generators.hpp"
#include "core/graph_io.hpp"
#include "core/hom_count.hpp"

struct homcert_context {
  std::uint64_t budget = homcert::kDefaultBudget;
  unsigned threads = 1;
  std::string last_error;
};

struct homcert_graph {
  homcert::Graph graph;
  std::optional<homcert::BipartiteGraph> bipartite;
};

struct homcert_target {
  homcert::TwoSortedTarget target;
};

struct homcert_activities {
  homcert::ActivitySpec spec;
};

namespace {

using homcert::ErrorCode;

// Signals a NULL argument from inside a guarded body.
struct NullArgument {};

homcert_status to_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_input: return HOMCERT_ERROR_INVALID_INPUT;
    case ErrorCode::not_bipartite: return HOMCERT_ERROR_NOT_BIPARTITE;
    case ErrorCode::not_regular: return HOMCERT_ERROR_NOT_REGULAR;
    case ErrorCode::budget_exceeded: return HOMCERT_ERROR_BUDGET_EXCEEDED;
    case ErrorCode::cap_exceeded: return HOMCERT_ERROR_CAP_EXCEEDED;
    case ErrorCode::generator_exhausted: return HOMCERT_ERROR_GENERATOR_EXHAUSTED;
    case ErrorCode::invalid_config: return HOMCERT_ERROR_INVALID_CONFIG;
  }
  return HOMCERT_ERROR_INTERNAL;
}

template <typename Body>
homcert_status guard(homcert_context* ctx, Body&& body) {
  if (ctx == nullptr) return HOMCERT_ERROR_NULL_ARGUMENT;
  ctx->last_error.clear();
  try {
    body();
    return HOMCERT_OK;
  } catch (const NullArgument&) {
    ctx->last_error = "unexpected NULL argument";
    return HOMCERT_ERROR_NULL_ARGUMENT;
  } catch (const homcert::Error& e) {
    ctx->last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    ctx->last_error = "out of memory";
    return HOMCERT_ERROR_OUT_OF_MEMORY;
  } catch (const std::exception& e) {
    ctx->last_error = e.what();
    return HOMCERT_ERROR_INTERNAL;
  }
}

template <typename... Ptrs>
void require(const Ptrs*... ptrs) {
  if (((ptrs == nullptr) || ...)) throw NullArgument{};
}

char* copy_string(const std::string& s) {
  auto* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

const homcert::BipartiteGraph& bipartite_of(const homcert_graph* g) {
  if (!g->bipartite) {
    throw homcert::Error(ErrorCode::not_bipartite, "graph has no declared bipartition (class_e)");
  }
  return *g->bipartite;
}

homcert::ActivitySystem resolve(const homcert_activities* acts, const homcert::Graph& h) {
  if (acts == nullptr) return homcert::ActivitySystem::unit(h.vertex_count());
  return acts->spec.resolve(h.vertex_count());
}

homcert_graph* wrap(homcert::BipartiteGraph b) {
  auto* g = new homcert_graph{b.graph(), std::move(b)};
  return g;
}

}  // namespace

extern "C" {

const char* homcert_version(void) { return "0.1.0"; }

const char* homcert_status_name(homcert_status status) {
  switch (status) {
    case HOMCERT_OK: return "ok";
    case HOMCERT_ERROR_NULL_ARGUMENT: return "null_argument";
    case HOMCERT_ERROR_INVALID_INPUT: return "invalid_input";
    case HOMCERT_ERROR_NOT_BIPARTITE: return "not_bipartite";
    case HOMCERT_ERROR_NOT_REGULAR: return "not_regular";
    case HOMCERT_ERROR_BUDGET_EXCEEDED: return "budget_exceeded";
    case HOMCERT_ERROR_CAP_EXCEEDED: return "cap_exceeded";
    case HOMCERT_ERROR_GENERATOR_EXHAUSTED: return "generator_exhausted";
    case HOMCERT_ERROR_INVALID_CONFIG: return "invalid_config";
    case HOMCERT_ERROR_OUT_OF_MEMORY: return "out_of_memory";
    case HOMCERT_ERROR_INTERNAL: return "internal";
  }
  return "unknown";
}

homcert_status homcert_context_create(homcert_context** out) {
  if (out == nullptr) return HOMCERT_ERROR_NULL_ARGUMENT;
  *out = new (std::nothrow) homcert_context();
  return *out != nullptr ? HOMCERT_OK : HOMCERT_ERROR_OUT_OF_MEMORY;
}

void homcert_context_free(homcert_context* ctx) { delete ctx; }

homcert_status homcert_context_set_budget(homcert_context* ctx, uint64_t budget) {
  return guard(ctx, [&] { ctx->budget = budget; });
}

homcert_status homcert_context_set_threads(homcert_context* ctx, unsigned threads) {
  return guard(ctx, [&] { ctx->threads = threads == 0 ? 1 : threads; });
}

const char* homcert_context_last_error(const homcert_context* ctx) {
  return ctx == nullptr ? "NULL context" : ctx->last_error.c_str();
}

void homcert_string_free(char* str) { std::free(str); }

homcert_status homcert_graph_parse(homcert_context* ctx, const char* json, homcert_graph** out) {
  return guard(ctx, [&] {
    require(json, out);
    auto doc = homcert::parse_graph_document(homcert::parse_json(json));
    auto* g = new homcert_graph{doc.graph, std::nullopt};
    if (doc.class_e) {
      try {
        g->bipartite = homcert::BipartiteGraph::check_bipartition(doc.graph, *doc.class_e);
      } catch (...) {
        delete g;
        throw;
      }
    }
    *out = g;
  });
}

homcert_status homcert_instance_build(homcert_context* ctx, const char* spec_json, const char* base_dir,
                                      homcert_graph** out) {
  return guard(ctx, [&] {
    require(spec_json, out);
    const auto spec = homcert::parse_instance_spec(homcert::parse_json(spec_json));
    auto inst = homcert::build_instance(spec, base_dir != nullptr ? base_dir : "");
    *out = new homcert_graph{std::move(inst.graph), std::move(inst.bipartite)};
  });
}

homcert_status homcert_graph_complete_bipartite(homcert_context* ctx, size_t a, size_t b, homcert_graph** out) {
  return guard(ctx, [&] {
    require(out);
    *out = wrap(homcert::gen_complete_bipartite(a, b));
  });
}

homcert_status homcert_graph_even_cycle(homcert_context* ctx, size_t length, homcert_graph** out) {
  return guard(ctx, [&] {
    require(out);
    *out = wrap(homcert::gen_even_cycle(length));
  });
}

homcert_status homcert_graph_hypercube(homcert_context* ctx, size_t dimension, homcert_graph** out) {
  return guard(ctx, [&] {
    require(out);
    *out = wrap(homcert::gen_hypercube(dimension));
  });
}

homcert_status homcert_graph_random_regular(homcert_context* ctx, size_t degree, size_t half, uint64_t seed,
                                            homcert_graph** out) {
  return guard(ctx, [&] {
    require(out);
    *out = wrap(homcert::gen_random_regular_bipartite(degree, half, seed));
  });
}

homcert_status homcert_graph_union(homcert_context* ctx, const homcert_graph* const* parts, size_t count,
                                   homcert_graph** out) {
  return guard(ctx, [&] {
    require(out);
    if (count > 0) require(parts);
    std::vector<homcert::BipartiteGraph> list;
    for (size_t i = 0; i < count; ++i) {
      require(parts[i]);
      list.push_back(bipartite_of(parts[i]));
    }
    *out = wrap(homcert::gen_union(list));
  });
}

homcert_status homcert_graph_set_classes(homcert_context* ctx, homcert_graph* graph, const uint32_t* class_e,
                                         size_t count) {
  return guard(ctx, [&] {
    require(graph);
    if (count > 0) require(class_e);
    std::vector<homcert::Vertex> vertices(class_e, class_e + count);
    graph->bipartite = homcert::BipartiteGraph::check_bipartition(graph->graph, vertices);
  });
}

int homcert_graph_has_classes(const homcert_graph* graph) {
  return graph != nullptr && graph->bipartite.has_value() ? 1 : 0;
}

size_t homcert_graph_vertex_count(const homcert_graph* graph) {
  return graph == nullptr ? 0 : graph->graph.vertex_count();
}

homcert_status homcert_graph_to_json(homcert_context* ctx, const homcert_graph* graph, char** out) {
  return guard(ctx, [&] {
    require(graph, out);
    const auto doc = graph->bipartite ? homcert::to_json(*graph->bipartite) : homcert::to_json(graph->graph);
    *out = copy_string(homcert::dump(doc));
  });
}

void homcert_graph_free(homcert_graph* graph) { delete graph; }

homcert_status homcert_activities_parse(homcert_context* ctx, const char* json, homcert_activities** out) {
  return guard(ctx, [&] {
    require(json, out);
    *out = new homcert_activities{homcert::parse_activities(std::string_view(json))};
  });
}

void homcert_activities_free(homcert_activities* acts) { delete acts; }

homcert_status homcert_target_parse(homcert_context* ctx, const char* json, homcert_target** out) {
  return guard(ctx, [&] {
    require(json, out);
    *out = new homcert_target{homcert::parse_target(json)};
  });
}

homcert_status homcert_double(homcert_context* ctx, const homcert_graph* h, homcert_target** out) {
  return guard(ctx, [&] {
    require(h, out);
    *out = new homcert_target{homcert::double_graph(h->graph)};
  });
}

homcert_status homcert_blowup(homcert_context* ctx, const homcert_graph* h, const homcert_activities* acts,
                              homcert_target** out, char** scale_out) {
  return guard(ctx, [&] {
    require(h, out);
    auto [target, meta] = homcert::blowup(h->graph, resolve(acts, h->graph));
    char* scale = scale_out != nullptr ? copy_string(homcert::to_string(meta.scale)) : nullptr;
    *out = new homcert_target{std::move(target)};
    if (scale_out != nullptr) *scale_out = scale;
  });
}

homcert_status homcert_scale_constant(homcert_context* ctx, const homcert_graph* h, const homcert_activities* acts,
                                      char** out) {
  return guard(ctx, [&] {
    require(h, out);
    *out = copy_string(homcert::to_string(homcert::scale_constant(resolve(acts, h->graph))));
  });
}

homcert_status homcert_target_to_json(homcert_context* ctx, const homcert_target* target, char** out) {
  return guard(ctx, [&] {
    require(target, out);
    *out = copy_string(homcert::dump(homcert::to_json(target->target)));
  });
}

void homcert_target_free(homcert_target* target) { delete target; }

homcert_status homcert_count_homs(homcert_context* ctx, const homcert_graph* g, const homcert_graph* h, char** out) {
  return guard(ctx, [&] {
    require(g, h, out);
    homcert::Budget budget(ctx->budget);
    *out = copy_string(homcert::to_string(homcert::count_homs(g->graph, h->graph, budget)));
  });
}

homcert_status homcert_count_homs_restricted(homcert_context* ctx, const homcert_graph* g,
                                             const homcert_target* target, char** out) {
  return guard(ctx, [&] {
    require(g, target, out);
    homcert::Budget budget(ctx->budget);
    *out = copy_string(homcert::to_string(homcert::count_homs_restricted(bipartite_of(g), target->target, budget)));
  });
}

homcert_status homcert_partition_fn(homcert_context* ctx, const homcert_graph* g, const homcert_graph* h,
                                    const homcert_activities* acts, char** out) {
  return guard(ctx, [&] {
    require(g, h, out);
    homcert::Budget budget(ctx->budget);
    const auto z = homcert::partition_fn(bipartite_of(g), h->graph, resolve(acts, h->graph), budget);
    *out = copy_string(homcert::to_string(z));
  });
}

homcert_status homcert_count_independent_sets(homcert_context* ctx, const homcert_graph* g, char** out) {
  return guard(ctx, [&] {
    require(g, out);
    homcert::Budget budget(ctx->budget);
    *out = copy_string(homcert::to_string(homcert::count_independent_sets(g->graph, budget)));
  });
}

homcert_status homcert_surjection_count(homcert_context* ctx, size_t n, size_t a, char** out) {
  return guard(ctx, [&] {
    require(out);
    *out = copy_string(homcert::to_string(homcert::surjection_count(n, a)));
  });
}

homcert_status homcert_knn_restricted_count(homcert_context* ctx, size_t n, const homcert_target* target,
                                            char** out) {
  return guard(ctx, [&] {
    require(target, out);
    homcert::Budget budget(ctx->budget);
    *out = copy_string(homcert::to_string(homcert::knn_restricted_count(n, target->target, budget)));
  });
}

homcert_status homcert_knn_partition(homcert_context* ctx, size_t n, const homcert_graph* h,
                                     const homcert_activities* acts, char** out) {
  return guard(ctx, [&] {
    require(h, out);
    homcert::Budget budget(ctx->budget);
    *out = copy_string(homcert::to_string(homcert::knn_partition(n, h->graph, resolve(acts, h->graph), budget)));
  });
}

homcert_status homcert_kab_partition(homcert_context* ctx, size_t a, size_t b, const homcert_graph* h,
                                     const homcert_activities* acts, char** out) {
  return guard(ctx, [&] {
    require(h, out);
    homcert::Budget budget(ctx->budget);
    *out = copy_string(homcert::to_string(homcert::kab_partition(a, b, h->graph, resolve(acts, h->graph), budget)));
  });
}

homcert_status homcert_eta(homcert_context* ctx, const homcert_graph* h, const homcert_activities* acts, char** out) {
  return guard(ctx, [&] {
    require(h, out);
    const auto w = homcert::eta_two_sided(h->graph, resolve(acts, h->graph));
    *out = copy_string(homcert::dump({{"value", homcert::to_string(w.value)}, {"A", w.a}, {"B", w.b}}));
  });
}

homcert_status homcert_certify(homcert_context* ctx, const char* proposition, const homcert_graph* g,
                               const homcert_graph* h, const homcert_activities* acts, char** out) {
  return guard(ctx, [&] {
    require(proposition, g, h, out);
    const std::string prop = proposition;
    homcert::Budget budget(ctx->budget);
    const auto system = resolve(acts, h->graph);
    homcert::CertReport report;
    if (prop == "nonbipartite_lower") {
      report = homcert::certify_nonbipartite_lower(g->graph, h->graph, budget);
    } else if (prop == "hom_ub") {
      report = homcert::certify_hom_ub(bipartite_of(g), h->graph, budget);
    } else if (prop == "weighted_ub") {
      report = homcert::certify_weighted_ub(bipartite_of(g), h->graph, system, budget);
    } else if (prop == "bireg") {
      report = homcert::certify_bireg(bipartite_of(g), h->graph, system, budget);
    } else if (prop == "sandwich") {
      report = homcert::certify_sandwich(bipartite_of(g), h->graph, system, budget);
    } else if (prop == "lift_identity") {
      report = homcert::certify_lift_identity(bipartite_of(g), h->graph, system, budget);
    } else if (prop == "double_identity") {
      report = homcert::certify_double_identity(bipartite_of(g), h->graph, budget);
    } else {
      throw homcert::Error(ErrorCode::invalid_input, "unknown proposition '" + prop + "'");
    }
    *out = copy_string(homcert::dump(homcert::to_json(report)));
  });
}

homcert_status homcert_campaign_run(homcert_context* ctx, const char* config_json, const char* base_dir, int strict,
                                    char** out, int* exit_code) {
  return guard(ctx, [&] {
    require(config_json, out, exit_code);
    homcert::Json doc;
    try {
      doc = homcert::parse_json(config_json);
    } catch (const homcert::Error& e) {
      throw homcert::Error(ErrorCode::invalid_config, e.what());
    }
    auto config = homcert::CampaignConfig::parse(doc, base_dir != nullptr ? base_dir : "");
    if (!doc.is_object() || !doc.contains("budget")) config.budget = ctx->budget;
    const auto reports = homcert::run_campaign(config, ctx->threads);
    *out = copy_string(homcert::report_stream(reports));
    *exit_code = homcert::campaign_exit_code(reports, strict != 0);
  });
}

}  // extern "C"
