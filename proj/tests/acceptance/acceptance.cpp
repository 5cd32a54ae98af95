// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "core/campaign.hpp"
#include "core/certify.hpp"
#include "core/closed_form.hpp"
#include "core/constructions.hpp"
#include "core/eta.hpp"
#include "core/generators.hpp"
#include "core/graph_io.hpp"
#include "core/hom_count.hpp"
#include "core/targets.hpp"
#include "homcert/homcert.h"
#include "support/oracles.hpp"

using namespace homcert;

namespace {

const std::filesystem::path kFixtures = HOMCERT_FIXTURES;

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Json default_campaign() { return parse_json(read_file(kFixtures / "default-campaign.json")); }

// The default campaign narrowed to the entries with the given proposition ids.
CampaignConfig campaign_subset(std::initializer_list<std::string> ids) {
  Json doc = default_campaign();
  Json kept = Json::array();
  for (const auto& entry : doc.at("propositions")) {
    const auto id = entry.is_string() ? entry.get<std::string>() : entry.at("id").get<std::string>();
    if (std::find(ids.begin(), ids.end(), id) != ids.end()) kept.push_back(entry);
  }
  doc["propositions"] = kept;
  return CampaignConfig::parse(doc, kFixtures);
}

Outcome c1() {
  Outcome o;
  for (std::size_t n = 1; n <= 10; ++n) {
    Budget budget;
    const auto g = gen_complete_bipartite(n, n).graph();
    const BigCount expected = (BigCount(1) << (n + 1)) - 1;
    const auto homs = count_homs(g, h_ind(), budget);
    const auto sets = count_independent_sets(g, budget);
    if (homs != expected || sets != expected) {
      o.fail("n=" + std::to_string(n) + " homs=" + to_string(homs) + " sets=" + to_string(sets));
    }
  }
  return o;
}

Outcome c2() {
  Outcome o;
  const std::vector<Rational> values{Rational(1, 3), Rational(1, 2), Rational(1), Rational(2), Rational(5)};
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const auto& lambda : values) {
      for (const auto& mu : values) {
        Budget budget;
        const auto acts = ActivitySystem::from_pairs({{lambda, mu}, {1, 1}});
        const Rational got = knn_partition(n, h_ind(), acts, budget);
        const Rational want = pow(Rational(1 + lambda), n) + pow(Rational(1 + mu), n) - 1;
        if (got != want) o.fail("n=" + std::to_string(n) + " got " + to_string(got) + " want " + to_string(want));
      }
    }
  }
  return o;
}

Outcome c3() {
  Outcome o;
  for (std::size_t k = 2; k <= 8; ++k) {
    const auto h = complete_graph(k);
    const auto w = eta_unweighted(h);
    if (w.value != Rational((k / 2) * ((k + 1) / 2))) o.fail("k=" + std::to_string(k) + " value " + to_string(w.value));
    for (Vertex i : w.a) {
      for (Vertex j : w.b) {
        if (!h.adjacent(i, j)) o.fail("k=" + std::to_string(k) + " witness not cross-complete");
      }
    }
    if (Rational(w.a.size() * w.b.size()) != w.value) o.fail("k=" + std::to_string(k) + " witness value mismatch");
  }
  return o;
}

Outcome c4() {
  Outcome o;
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<std::size_t> side(1, 5), deg(1, 4);
  std::uniform_real_distribution<double> density(0.3, 0.9);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t u = side(rng), l = side(rng), n = deg(rng);
    const auto t = testing::random_target(rng, u, l, density(rng));
    Budget budget;
    const auto closed = knn_restricted_count(n, t, budget);
    const auto search = count_homs_restricted(gen_complete_bipartite(n, n), t, budget);
    if (closed != search) o.fail("trial " + std::to_string(trial) + ": " + to_string(closed) + " vs " + to_string(search));
  }
  return o;
}

Outcome c5() {
  Outcome o;
  const auto reports = run_campaign(campaign_subset({"lift_identity", "double_identity"}), 1);
  std::size_t lift = 0, dbl = 0;
  for (const auto& r : reports) {
    (r.proposition == "lift_identity" ? lift : dbl) += 1;
    if (r.verdict != Verdict::holds || !r.checks.front().equality) o.fail(r.proposition + " " + dump(r.instance));
  }
  // 4 sources x 4 targets, five activity systems for the lift.
  if (lift != 80 || dbl != 16) o.fail("unexpected grid size " + std::to_string(lift) + "/" + std::to_string(dbl));
  return o;
}

Outcome random_campaign(const std::string& id, std::size_t* checks_out) {
  Outcome o;
  const auto reports = run_campaign(campaign_subset({id}), 8);
  std::set<std::uint64_t> graphs;
  std::set<std::string> targets;
  for (const auto& r : reports) {
    const auto& g = r.instance.at("g");
    if (g.at("n") != 3 || r.instance.at("N").get<std::size_t>() > 16) o.fail("instance outside the range");
    graphs.insert(r.instance.at("seed").get<std::uint64_t>());
    targets.insert(r.instance.at("h").get<std::string>());
    if (r.verdict != Verdict::holds) o.fail(std::string(to_string(r.verdict)) + " at " + dump(r.instance));
    *checks_out += r.checks.size();
  }
  if (graphs.size() != 100) o.fail(std::to_string(graphs.size()) + " distinct graphs, want 100");
  if (targets != std::set<std::string>{"hind", "k3"}) o.fail("target set differs");
  return o;
}

Outcome c6() {
  std::size_t checks = 0;
  auto o = random_campaign("weighted_ub", &checks);
  o.detail = o.ok ? std::to_string(checks) + " exact comparisons" : o.detail;
  return o;
}

Outcome c7() {
  std::size_t checks = 0;
  auto o = random_campaign("sandwich", &checks);
  if (o.ok) o.detail = std::to_string(checks) + " exact comparisons";
  Budget budget;
  const auto r = certify_nonbipartite_lower(complete_graph(3), complete_graph(2), budget);
  if (r.verdict != Verdict::violated || !r.expected_violation || r.values.at("hom_g") != "0" ||
      r.values.at("eta") != "1") {
    o.fail("non-bipartite demonstration did not reproduce");
  }
  return o;
}

Outcome c8() {
  Outcome o;
  for (auto [a, b] : {std::pair<std::size_t, std::size_t>{1, 2}, {2, 3}, {3, 2}}) {
    Budget budget;
    const auto r = certify_bireg(gen_complete_bipartite(a, b), h_ind(), ActivitySystem::unit(2), budget);
    if (r.verdict != Verdict::holds || !r.checks.front().equality) o.fail("K_{a,b} not tight");
  }
  const auto inc = parse_bipartite(read_file(kFixtures / "k4-incidence.json"));
  if (inc.vertex_count() != 10 || inc.biregular_degrees() != std::pair<std::size_t, std::size_t>{3, 2}) {
    o.fail("incidence fixture is not (3,2)-biregular on 10 vertices");
  }
  Budget budget;
  const auto r = certify_bireg(inc, h_ind(), ActivitySystem::unit(2), budget);
  if (r.verdict != Verdict::holds || r.checks.front().equality) o.fail("incidence graph not strict");
  return o;
}

// True when every component is K_{m,m} for some m.
bool is_union_of_balanced_bicliques(const BipartiteGraph& g) {
  for (const auto& comp : g.graph().components()) {
    std::size_t e = 0, odd = 0;
    for (Vertex v : comp) (g.in_class_e(v) ? e : odd) += 1;
    if (e != odd) return false;
    for (Vertex v : comp) {
      if (g.graph().degree(v) != e) return false;
    }
  }
  return true;
}

Outcome c9() {
  Outcome o;
  std::size_t tight = 0, strict = 0;
  for (const auto& entry : std::filesystem::directory_iterator(kFixtures)) {
    const auto doc = parse_json(read_file(entry.path()));
    if (!doc.contains("family") && !doc.contains("class_e")) continue;
    const auto inst = build_instance(doc.contains("family") ? parse_instance_spec(doc)
                                                             : parse_instance_spec(Json{{"family", "file"}, {"graph", doc}}),
                                     kFixtures);
    if (!inst.bipartite || !inst.bipartite->regular_degree()) continue;
    const bool extremal = is_union_of_balanced_bicliques(*inst.bipartite);
    for (const auto& h : {h_ind(), complete_graph(3)}) {
      Budget budget;
      const auto r = certify_hom_ub(*inst.bipartite, h, budget);
      if (r.verdict != Verdict::holds) o.fail(entry.path().filename().string() + " does not hold");
      if (r.checks.front().equality != extremal) o.fail(entry.path().filename().string() + " equality mismatch");
      (extremal ? tight : strict) += 1;
    }
  }
  Budget budget;
  const auto c6 = certify_hom_ub(gen_even_cycle(6), complete_graph(3), budget);
  const auto& c = c6.checks.front();
  if (c.lhs != pow(Rational(66), 4) || c.rhs != pow(Rational(18), 6) || c.equality) o.fail("C_6 vs K_3 values");
  if (tight == 0 || strict == 0) o.fail("fixture coverage");
  if (o.ok) o.detail = std::to_string(tight) + " tight, " + std::to_string(strict) + " strict";
  return o;
}

std::string campaign_stream(unsigned threads, int* exit_code) {
  homcert_context* ctx = nullptr;
  homcert_context_create(&ctx);
  homcert_context_set_threads(ctx, threads);
  char* out = nullptr;
  const auto status = homcert_campaign_run(ctx, read_file(kFixtures / "default-campaign.json").c_str(),
                                           kFixtures.c_str(), 0, &out, exit_code);
  std::string text = status == HOMCERT_OK ? out : std::string("error: ") + homcert_context_last_error(ctx);
  homcert_string_free(out);
  homcert_context_free(ctx);
  return text;
}

Outcome c10() {
  Outcome o;
  int code1 = -1, code8 = -1;
  const auto one = campaign_stream(1, &code1);
  const auto eight = campaign_stream(8, &code8);
  if (one != eight) o.fail("streams differ");
  if (code1 != 0 || code8 != 0) o.fail("campaign exit code " + std::to_string(code1) + "/" + std::to_string(code8));
  if (o.ok) o.detail = std::to_string(std::count(one.begin(), one.end(), '\n')) + " reports, " +
                       std::to_string(one.size()) + " bytes";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    double limit_seconds;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "independent-set extremal formula", 1, c1},
      {2, "K_{n,n} closed form for H_ind", 1, c2},
      {3, "eta of complete graphs", 1, c3},
      {4, "closed form vs restricted search", 30, c4},
      {5, "lift and doubling identities", 60, c5},
      {6, "weighted upper bound campaign", 600, c6},
      {7, "sandwich bounds and non-bipartite failure", 600, c7},
      {8, "biregular bound", 30, c8},
      {9, "extremality equality", 60, c9},
      {10, "determinism across thread counts", 600, c10},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.limit_seconds) o.fail("took " + std::to_string(secs) + "s, limit " + std::to_string(c.limit_seconds));
    failures += o.ok ? 0 : 1;
    std::printf("%s criterion %d: %s (%.3fs)%s%s\n", o.ok ? "PASS" : "FAIL", c.id, c.title, secs,
                o.detail.empty() ? "" : " - ", o.detail.c_str());
  }
  return failures == 0 ? 0 : 1;
}
