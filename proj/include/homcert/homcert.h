/*
 * homcert: exact homomorphism counting, partition functions and bound
 * certification for bipartite sources.
 *
 * Conventions
 *  - Every handle is opaque and owned by the caller; free it with the
 *    matching *_free function. Passing NULL to a *_free function is a no-op.
 *  - Functions return a homcert_status. On failure, a human-readable
 *    message is available from homcert_context_last_error().
 *  - Numbers come back as heap strings (decimal integers, or "p/q" for
 *    rationals) released with homcert_string_free(). No value is ever
 *    reported as a binary float.
 *  - A context is not thread-safe; use one per thread.
 */
#ifndef HOMCERT_HOMCERT_H
#define HOMCERT_HOMCERT_H

#include <stddef.h>
#include <stdint.h>

#if defined(HOMCERT_BUILDING_LIBRARY)
#define HOMCERT_API __attribute__((visibility("default")))
#else
#define HOMCERT_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum homcert_status {
  HOMCERT_OK = 0,
  HOMCERT_ERROR_NULL_ARGUMENT = 1,
  HOMCERT_ERROR_INVALID_INPUT = 2,
  HOMCERT_ERROR_NOT_BIPARTITE = 3,
  HOMCERT_ERROR_NOT_REGULAR = 4,
  HOMCERT_ERROR_BUDGET_EXCEEDED = 5,
  HOMCERT_ERROR_CAP_EXCEEDED = 6,
  HOMCERT_ERROR_GENERATOR_EXHAUSTED = 7,
  HOMCERT_ERROR_INVALID_CONFIG = 8,
  HOMCERT_ERROR_OUT_OF_MEMORY = 9,
  HOMCERT_ERROR_INTERNAL = 10
} homcert_status;

typedef struct homcert_context homcert_context;
/* A graph, optionally carrying a declared bipartition (E, O). */
typedef struct homcert_graph homcert_graph;
/* A graph with its vertices split into upper U and lower L. */
typedef struct homcert_target homcert_target;
/* Activity pairs (lambda, mu) keyed by target vertex; unlisted vertices
 * default to 1/1. Resolved against a target when used. */
typedef struct homcert_activities homcert_activities;

HOMCERT_API const char* homcert_version(void);
/* Stable identifier such as "budget_exceeded". */
HOMCERT_API const char* homcert_status_name(homcert_status status);

HOMCERT_API homcert_status homcert_context_create(homcert_context** out);
HOMCERT_API void homcert_context_free(homcert_context* ctx);
/* Node-expansion allowance for each counting call (default 500000000). */
HOMCERT_API homcert_status homcert_context_set_budget(homcert_context* ctx, uint64_t budget);
/* Worker threads for campaigns (default 1). */
HOMCERT_API homcert_status homcert_context_set_threads(homcert_context* ctx, unsigned threads);
HOMCERT_API const char* homcert_context_last_error(const homcert_context* ctx);

HOMCERT_API void homcert_string_free(char* str);

/* ---- graphs ---------------------------------------------------------- */

/* {"vertices": k, "edges": [[u,v],...], "loops": [...], "class_e"?: [...]}.
 * With "class_e" the bipartition is validated and kept. */
HOMCERT_API homcert_status homcert_graph_parse(homcert_context* ctx, const char* json, homcert_graph** out);
/* Instance spec {"family": ..., ...}; relative file paths resolve against
 * base_dir (may be NULL). */
HOMCERT_API homcert_status homcert_instance_build(homcert_context* ctx, const char* spec_json, const char* base_dir,
                                                  homcert_graph** out);
HOMCERT_API homcert_status homcert_graph_complete_bipartite(homcert_context* ctx, size_t a, size_t b,
                                                            homcert_graph** out);
HOMCERT_API homcert_status homcert_graph_even_cycle(homcert_context* ctx, size_t length, homcert_graph** out);
HOMCERT_API homcert_status homcert_graph_hypercube(homcert_context* ctx, size_t dimension, homcert_graph** out);
HOMCERT_API homcert_status homcert_graph_random_regular(homcert_context* ctx, size_t degree, size_t half,
                                                        uint64_t seed, homcert_graph** out);
/* Every part must be bipartite. */
HOMCERT_API homcert_status homcert_graph_union(homcert_context* ctx, const homcert_graph* const* parts, size_t count,
                                               homcert_graph** out);
/* Declares class E; the rest is class O. Fails unless the split is proper. */
HOMCERT_API homcert_status homcert_graph_set_classes(homcert_context* ctx, homcert_graph* graph,
                                                     const uint32_t* class_e, size_t count);
HOMCERT_API int homcert_graph_has_classes(const homcert_graph* graph);
HOMCERT_API size_t homcert_graph_vertex_count(const homcert_graph* graph);
HOMCERT_API homcert_status homcert_graph_to_json(homcert_context* ctx, const homcert_graph* graph, char** out);
HOMCERT_API void homcert_graph_free(homcert_graph* graph);

/* ---- activities ------------------------------------------------------ */

/* {"activities": {"<vertex>": {"lambda": "p/q", "mu": "p/q"}}} and/or
 * {"uniform": {"lambda": ..., "mu": ...}}; "lambda" alone sets both. */
HOMCERT_API homcert_status homcert_activities_parse(homcert_context* ctx, const char* json,
                                                    homcert_activities** out);
HOMCERT_API void homcert_activities_free(homcert_activities* acts);

/* ---- constructions --------------------------------------------------- */

HOMCERT_API homcert_status homcert_target_parse(homcert_context* ctx, const char* json, homcert_target** out);
HOMCERT_API homcert_status homcert_double(homcert_context* ctx, const homcert_graph* h, homcert_target** out);
/* acts may be NULL (all ones). scale_out, if not NULL, receives C. */
HOMCERT_API homcert_status homcert_blowup(homcert_context* ctx, const homcert_graph* h,
                                          const homcert_activities* acts, homcert_target** out, char** scale_out);
HOMCERT_API homcert_status homcert_scale_constant(homcert_context* ctx, const homcert_graph* h,
                                                  const homcert_activities* acts, char** out);
HOMCERT_API homcert_status homcert_target_to_json(homcert_context* ctx, const homcert_target* target, char** out);
HOMCERT_API void homcert_target_free(homcert_target* target);

/* ---- counting -------------------------------------------------------- */

HOMCERT_API homcert_status homcert_count_homs(homcert_context* ctx, const homcert_graph* g, const homcert_graph* h,
                                              char** out);
/* g must carry classes. */
HOMCERT_API homcert_status homcert_count_homs_restricted(homcert_context* ctx, const homcert_graph* g,
                                                         const homcert_target* target, char** out);
/* g must carry classes; acts may be NULL. Result is "p/q". */
HOMCERT_API homcert_status homcert_partition_fn(homcert_context* ctx, const homcert_graph* g, const homcert_graph* h,
                                                const homcert_activities* acts, char** out);
HOMCERT_API homcert_status homcert_count_independent_sets(homcert_context* ctx, const homcert_graph* g, char** out);

/* ---- closed forms ---------------------------------------------------- */

HOMCERT_API homcert_status homcert_surjection_count(homcert_context* ctx, size_t n, size_t a, char** out);
HOMCERT_API homcert_status homcert_knn_restricted_count(homcert_context* ctx, size_t n, const homcert_target* target,
                                                        char** out);
HOMCERT_API homcert_status homcert_knn_partition(homcert_context* ctx, size_t n, const homcert_graph* h,
                                                 const homcert_activities* acts, char** out);
/* Class E of K_{a,b} is the a-vertex side and carries lambda. */
HOMCERT_API homcert_status homcert_kab_partition(homcert_context* ctx, size_t a, size_t b, const homcert_graph* h,
                                                 const homcert_activities* acts, char** out);

/* ---- eta ------------------------------------------------------------- */

/* JSON {"value": "p/q", "A": [...], "B": [...]}; acts may be NULL. */
HOMCERT_API homcert_status homcert_eta(homcert_context* ctx, const homcert_graph* h, const homcert_activities* acts,
                                       char** out);

/* ---- certification --------------------------------------------------- */

/* One report as a JSON document. proposition is one of hom_ub,
 * weighted_ub, bireg, sandwich, lift_identity, double_identity,
 * nonbipartite_lower. acts may be NULL. */
HOMCERT_API homcert_status homcert_certify(homcert_context* ctx, const char* proposition, const homcert_graph* g,
                                           const homcert_graph* h, const homcert_activities* acts, char** out);
/* Runs a campaign config; out receives the JSON-lines report stream and
 * exit_code 0 (all hold or expected), 1 (unexpected violation) or 3
 * (strict and some check skipped for budget). The config's own "budget"
 * overrides the context budget when present. */
HOMCERT_API homcert_status homcert_campaign_run(homcert_context* ctx, const char* config_json, const char* base_dir,
                                                int strict, char** out, int* exit_code);

#ifdef __cplusplus
}
#endif

#endif /* HOMCERT_HOMCERT_H */
