#include <algorithm>
#include <cstring>
#include <memory>
#include <string>
#include <vector>

#include "doctest.h"
#include "homcert/homcert.h"

namespace {

struct Ctx {
  homcert_context* ctx = nullptr;
  Ctx() { REQUIRE(homcert_context_create(&ctx) == HOMCERT_OK); }
  ~Ctx() { homcert_context_free(ctx); }
  operator homcert_context*() const { return ctx; }
};

std::string take(char* s) {
  REQUIRE(s != nullptr);
  std::string out(s);
  homcert_string_free(s);
  return out;
}

homcert_graph* graph(homcert_context* ctx, const char* json) {
  homcert_graph* g = nullptr;
  REQUIRE(homcert_graph_parse(ctx, json, &g) == HOMCERT_OK);
  return g;
}

const char* kHind = R"({"vertices":2,"edges":[[0,1]],"loops":[1]})";
const char* kK3 = R"({"vertices":3,"edges":[[0,1],[1,2],[0,2]]})";

}  // namespace

TEST_CASE("version and status names") {
  CHECK(std::strlen(homcert_version()) > 0);
  CHECK(std::string(homcert_status_name(HOMCERT_OK)) == "ok");
  CHECK(std::string(homcert_status_name(HOMCERT_ERROR_BUDGET_EXCEEDED)) == "budget_exceeded");
}

TEST_CASE("counting through handles") {
  Ctx ctx;
  homcert_graph* knn = nullptr;
  REQUIRE(homcert_graph_complete_bipartite(ctx, 3, 3, &knn) == HOMCERT_OK);
  homcert_graph* hind = graph(ctx, kHind);
  char* out = nullptr;
  REQUIRE(homcert_count_homs(ctx, knn, hind, &out) == HOMCERT_OK);
  CHECK(take(out) == "15");
  REQUIRE(homcert_count_independent_sets(ctx, knn, &out) == HOMCERT_OK);
  CHECK(take(out) == "15");

  homcert_activities* acts = nullptr;
  REQUIRE(homcert_activities_parse(ctx, R"({"activities":{"0":{"lambda":"2","mu":"2"}}})", &acts) == HOMCERT_OK);
  homcert_graph* k22 = nullptr;
  REQUIRE(homcert_graph_complete_bipartite(ctx, 2, 2, &k22) == HOMCERT_OK);
  REQUIRE(homcert_partition_fn(ctx, k22, hind, acts, &out) == HOMCERT_OK);
  CHECK(take(out) == "17");
  REQUIRE(homcert_knn_partition(ctx, 2, hind, acts, &out) == HOMCERT_OK);
  CHECK(take(out) == "17");
  REQUIRE(homcert_kab_partition(ctx, 2, 1, hind, nullptr, &out) == HOMCERT_OK);
  CHECK(take(out) == "5");
  REQUIRE(homcert_surjection_count(ctx, 2, 2, &out) == HOMCERT_OK);
  CHECK(take(out) == "2");

  homcert_target* dbl = nullptr;
  REQUIRE(homcert_double(ctx, hind, &dbl) == HOMCERT_OK);
  REQUIRE(homcert_knn_restricted_count(ctx, 2, dbl, &out) == HOMCERT_OK);
  CHECK(take(out) == "7");
  REQUIRE(homcert_count_homs_restricted(ctx, k22, dbl, &out) == HOMCERT_OK);
  CHECK(take(out) == "7");

  homcert_target* blown = nullptr;
  char* scale = nullptr;
  homcert_activities* frac = nullptr;
  REQUIRE(homcert_activities_parse(ctx, R"({"activities":{"0":{"lambda":"3/2","mu":"1"}}})", &frac) == HOMCERT_OK);
  REQUIRE(homcert_blowup(ctx, hind, frac, &blown, &scale) == HOMCERT_OK);
  CHECK(take(scale) == "2");
  REQUIRE(homcert_scale_constant(ctx, hind, frac, &out) == HOMCERT_OK);
  CHECK(take(out) == "2");
  REQUIRE(homcert_target_to_json(ctx, blown, &out) == HOMCERT_OK);
  homcert_target* back = nullptr;
  CHECK(homcert_target_parse(ctx, take(out).c_str(), &back) == HOMCERT_OK);

  REQUIRE(homcert_eta(ctx, hind, nullptr, &out) == HOMCERT_OK);
  CHECK(take(out) == R"({"A":[0,1],"B":[1],"value":"2"})");

  homcert_target_free(back);
  homcert_target_free(blown);
  homcert_target_free(dbl);
  homcert_activities_free(frac);
  homcert_activities_free(acts);
  homcert_graph_free(k22);
  homcert_graph_free(hind);
  homcert_graph_free(knn);
}

TEST_CASE("generators and classes") {
  Ctx ctx;
  homcert_graph* c6 = nullptr;
  REQUIRE(homcert_graph_even_cycle(ctx, 6, &c6) == HOMCERT_OK);
  CHECK(homcert_graph_has_classes(c6) == 1);
  CHECK(homcert_graph_vertex_count(c6) == 6);
  homcert_graph* q3 = nullptr;
  REQUIRE(homcert_graph_hypercube(ctx, 3, &q3) == HOMCERT_OK);
  homcert_graph* r1 = nullptr;
  homcert_graph* r2 = nullptr;
  REQUIRE(homcert_graph_random_regular(ctx, 3, 6, 42, &r1) == HOMCERT_OK);
  REQUIRE(homcert_graph_random_regular(ctx, 3, 6, 42, &r2) == HOMCERT_OK);
  char* a = nullptr;
  char* b = nullptr;
  REQUIRE(homcert_graph_to_json(ctx, r1, &a) == HOMCERT_OK);
  REQUIRE(homcert_graph_to_json(ctx, r2, &b) == HOMCERT_OK);
  CHECK(take(a) == take(b));
  const homcert_graph* parts[] = {c6, q3};
  homcert_graph* u = nullptr;
  REQUIRE(homcert_graph_union(ctx, parts, 2, &u) == HOMCERT_OK);
  CHECK(homcert_graph_vertex_count(u) == 14);

  homcert_graph* k3 = graph(ctx, kK3);
  CHECK(homcert_graph_has_classes(k3) == 0);
  const uint32_t cls[] = {0};
  CHECK(homcert_graph_set_classes(ctx, k3, cls, 1) == HOMCERT_ERROR_NOT_BIPARTITE);
  const homcert_graph* bad_parts[] = {c6, k3};
  CHECK(homcert_graph_union(ctx, bad_parts, 2, &u) == HOMCERT_ERROR_NOT_BIPARTITE);

  homcert_graph* path = graph(ctx, R"({"vertices":3,"edges":[[0,1],[1,2]]})");
  const uint32_t middle[] = {1};
  CHECK(homcert_graph_set_classes(ctx, path, middle, 1) == HOMCERT_OK);
  CHECK(homcert_graph_has_classes(path) == 1);

  homcert_graph* inst = nullptr;
  CHECK(homcert_instance_build(ctx, R"({"family":"cycle","length":4})", nullptr, &inst) == HOMCERT_OK);
  homcert_graph_free(inst);
  homcert_graph_free(path);
  homcert_graph_free(k3);
  homcert_graph_free(u);
  homcert_graph_free(r2);
  homcert_graph_free(r1);
  homcert_graph_free(q3);
  homcert_graph_free(c6);
}

TEST_CASE("errors map to statuses with messages") {
  Ctx ctx;
  homcert_graph* g = nullptr;
  CHECK(homcert_graph_parse(ctx, "{broken", &g) == HOMCERT_ERROR_INVALID_INPUT);
  CHECK(std::strlen(homcert_context_last_error(ctx)) > 0);
  CHECK(g == nullptr);
  CHECK(homcert_graph_parse(ctx, R"({"vertices":2,"edges":[[0,1]],"class_e":[0,1]})", &g) ==
        HOMCERT_ERROR_NOT_BIPARTITE);
  CHECK(homcert_graph_even_cycle(ctx, 5, &g) == HOMCERT_ERROR_INVALID_INPUT);

  homcert_graph* k3 = graph(ctx, kK3);
  homcert_graph* hind = graph(ctx, kHind);
  char* out = nullptr;
  CHECK(homcert_partition_fn(ctx, k3, hind, nullptr, &out) == HOMCERT_ERROR_NOT_BIPARTITE);

  homcert_graph* q4 = nullptr;
  REQUIRE(homcert_graph_hypercube(ctx, 4, &q4) == HOMCERT_OK);
  REQUIRE(homcert_context_set_budget(ctx, 5) == HOMCERT_OK);
  CHECK(homcert_count_homs(ctx, q4, k3, &out) == HOMCERT_ERROR_BUDGET_EXCEEDED);
  REQUIRE(homcert_context_set_budget(ctx, 500000000) == HOMCERT_OK);
  CHECK(homcert_count_homs(ctx, q4, k3, &out) == HOMCERT_OK);
  take(out);

  homcert_graph* k25 = nullptr;
  REQUIRE(homcert_graph_complete_bipartite(ctx, 1, 24, &k25) == HOMCERT_OK);
  CHECK(homcert_eta(ctx, k25, nullptr, &out) == HOMCERT_ERROR_CAP_EXCEEDED);

  homcert_activities* acts = nullptr;
  CHECK(homcert_activities_parse(ctx, R"({"activities":{"0":{"lambda":"-1"}}})", &acts) ==
        HOMCERT_ERROR_INVALID_INPUT);
  REQUIRE(homcert_activities_parse(ctx, R"({"activities":{"7":{"lambda":"2"}}})", &acts) == HOMCERT_OK);
  CHECK(homcert_eta(ctx, hind, acts, &out) == HOMCERT_ERROR_INVALID_INPUT);

  CHECK(homcert_certify(ctx, "nope", q4, hind, nullptr, &out) == HOMCERT_ERROR_INVALID_INPUT);
  int code = -1;
  CHECK(homcert_campaign_run(ctx, R"({"propositions":["x"]})", nullptr, 0, &out, &code) ==
        HOMCERT_ERROR_INVALID_CONFIG);
  CHECK(homcert_campaign_run(ctx, "not json", nullptr, 0, &out, &code) == HOMCERT_ERROR_INVALID_CONFIG);

  homcert_activities_free(acts);
  homcert_graph_free(k25);
  homcert_graph_free(q4);
  homcert_graph_free(hind);
  homcert_graph_free(k3);
}

TEST_CASE("NULL arguments") {
  Ctx ctx;
  homcert_graph* g = nullptr;
  char* out = nullptr;
  CHECK(homcert_context_create(nullptr) == HOMCERT_ERROR_NULL_ARGUMENT);
  CHECK(homcert_graph_parse(nullptr, kHind, &g) == HOMCERT_ERROR_NULL_ARGUMENT);
  CHECK(homcert_graph_parse(ctx, nullptr, &g) == HOMCERT_ERROR_NULL_ARGUMENT);
  CHECK(homcert_graph_parse(ctx, kHind, nullptr) == HOMCERT_ERROR_NULL_ARGUMENT);
  CHECK(homcert_count_homs(ctx, nullptr, nullptr, &out) == HOMCERT_ERROR_NULL_ARGUMENT);
  CHECK(homcert_eta(ctx, nullptr, nullptr, &out) == HOMCERT_ERROR_NULL_ARGUMENT);
  CHECK(homcert_graph_has_classes(nullptr) == 0);
  CHECK(homcert_graph_vertex_count(nullptr) == 0);
  homcert_graph_free(nullptr);
  homcert_target_free(nullptr);
  homcert_activities_free(nullptr);
  homcert_string_free(nullptr);
  homcert_context_free(nullptr);
}

TEST_CASE("certify and campaigns") {
  Ctx ctx;
  homcert_graph* c6 = nullptr;
  REQUIRE(homcert_graph_even_cycle(ctx, 6, &c6) == HOMCERT_OK);
  homcert_graph* k3 = graph(ctx, kK3);
  char* out = nullptr;
  REQUIRE(homcert_certify(ctx, "hom_ub", c6, k3, nullptr, &out) == HOMCERT_OK);
  const auto report = take(out);
  CHECK(report.find(R"("lhs":"18974736")") != std::string::npos);
  CHECK(report.find(R"("verdict":"holds")") != std::string::npos);

  homcert_graph* k2 = graph(ctx, R"({"vertices":2,"edges":[[0,1]]})");
  REQUIRE(homcert_certify(ctx, "nonbipartite_lower", k3, k2, nullptr, &out) == HOMCERT_OK);
  CHECK(take(out).find(R"("expected_violation":true)") != std::string::npos);

  int code = -1;
  REQUIRE(homcert_campaign_run(ctx, "{}", nullptr, 0, &out, &code) == HOMCERT_OK);
  CHECK(take(out).empty());
  CHECK(code == 0);
  const char* cfg = R"({"propositions":["hom_ub"],"families":[{"family":"cycle","length":[4,6]}],
                        "grids":{"targets":["k3"]}})";
  REQUIRE(homcert_context_set_budget(ctx, 0) == HOMCERT_OK);
  REQUIRE(homcert_campaign_run(ctx, cfg, nullptr, 1, &out, &code) == HOMCERT_OK);
  CHECK(take(out).find("skipped-budget") != std::string::npos);
  CHECK(code == 3);
  REQUIRE(homcert_context_set_budget(ctx, 1000000) == HOMCERT_OK);
  REQUIRE(homcert_context_set_threads(ctx, 4) == HOMCERT_OK);
  REQUIRE(homcert_campaign_run(ctx, cfg, nullptr, 1, &out, &code) == HOMCERT_OK);
  const auto stream = take(out);
  CHECK(code == 0);
  CHECK(std::count(stream.begin(), stream.end(), '\n') == 2);

  homcert_graph_free(k2);
  homcert_graph_free(k3);
  homcert_graph_free(c6);
}
