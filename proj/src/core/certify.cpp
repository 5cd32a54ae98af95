#include "core/certify.hpp"

#include <algorithm>
#include <functional>

#include "core/closed_form.hpp"
#include "core/constructions.hpp"
#include "core/error.hpp"
#include "core/eta.hpp"

namespace homcert {

const char* to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::violated: return "violated";
    case Verdict::vacuous: return "vacuous";
    case Verdict::skipped_budget: return "skipped-budget";
  }
  return "unknown";
}

std::optional<Rational> Comparison::slack() const {
  if (sgn(lhs) <= 0) return std::nullopt;
  return Rational(rhs / lhs);
}

Json to_json(const CertReport& report) {
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    Json item{{"name", c.name},
              {"relation", c.relation},
              {"lhs", to_string(c.lhs)},
              {"rhs", to_string(c.rhs)},
              {"verdict", to_string(c.verdict)},
              {"equality", c.equality}};
    if (auto s = c.slack()) item["slack"] = to_string(*s);
    checks.push_back(std::move(item));
  }
  Json doc{{"proposition", report.proposition},
           {"instance", report.instance},
           {"values", report.values},
           {"checks", std::move(checks)},
           {"verdict", to_string(report.verdict)},
           {"expected_violation", report.expected_violation}};
  if (!report.note.empty()) doc["note"] = report.note;
  return doc;
}

namespace {

Comparison compare_le(std::string name, Rational lhs, Rational rhs) {
  Comparison c{std::move(name), "<=", std::move(lhs), std::move(rhs)};
  c.equality = c.lhs == c.rhs;
  c.verdict = c.lhs <= c.rhs ? Verdict::holds : Verdict::violated;
  return c;
}

Comparison compare_eq(std::string name, Rational lhs, Rational rhs) {
  Comparison c{std::move(name), "==", std::move(lhs), std::move(rhs)};
  c.equality = c.lhs == c.rhs;
  c.verdict = c.equality ? Verdict::holds : Verdict::violated;
  return c;
}

void finalize(CertReport& report) {
  const auto has = [&](Verdict v) {
    return std::any_of(report.checks.begin(), report.checks.end(), [&](const auto& c) { return c.verdict == v; });
  };
  if (has(Verdict::violated)) {
    report.verdict = Verdict::violated;
  } else if (!report.checks.empty() &&
             std::all_of(report.checks.begin(), report.checks.end(),
                         [](const auto& c) { return c.verdict == Verdict::vacuous; })) {
    report.verdict = Verdict::vacuous;
  } else {
    report.verdict = Verdict::holds;
  }
}

// Runs body; resource exhaustion becomes a skipped-budget report.
CertReport guarded(std::string proposition, Json instance, const std::function<void(CertReport&)>& body) {
  CertReport report;
  report.proposition = std::move(proposition);
  report.instance = std::move(instance);
  try {
    body(report);
    finalize(report);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::budget_exceeded && e.code() != ErrorCode::cap_exceeded) throw;
    report.checks.clear();
    report.values = Json::object();
    report.verdict = Verdict::skipped_budget;
    report.note = e.what();
  }
  return report;
}

std::size_t require_regular(const BipartiteGraph& g) {
  const auto n = g.regular_degree();
  if (!n || *n == 0) throw Error(ErrorCode::not_regular, "G must be n-regular with n >= 1");
  return *n;
}

Json describe(const BipartiteGraph& g, const Graph& h, std::optional<std::size_t> n) {
  Json d{{"N", g.vertex_count()}, {"h_vertices", h.vertex_count()}};
  if (n) d["n"] = *n;
  return d;
}

}  // namespace

CertReport certify_hom_ub(const BipartiteGraph& g, const Graph& h, Budget& budget) {
  const auto n = require_regular(g);
  const auto big_n = g.vertex_count();
  return guarded("hom_ub", describe(g, h, n), [&](CertReport& r) {
    const BigCount count = count_homs(g.graph(), h, budget);
    const BigCount extremal = knn_restricted_count(n, double_graph(h), budget);
    r.values = {{"hom_g", to_string(count)}, {"hom_knn", to_string(extremal)}};
    r.checks.push_back(compare_le("upper", Rational(pow(count, 2 * n)), Rational(pow(extremal, big_n))));
  });
}

CertReport certify_weighted_ub(const BipartiteGraph& g, const Graph& h, const ActivitySystem& acts,
                               Budget& budget) {
  const auto n = require_regular(g);
  const auto big_n = g.vertex_count();
  return guarded("weighted_ub", describe(g, h, n), [&](CertReport& r) {
    const Rational z = partition_fn(g, h, acts, budget);
    const Rational extremal = knn_partition(n, h, acts, budget);
    r.values = {{"z_g", to_string(z)}, {"z_knn", to_string(extremal)}};
    r.checks.push_back(compare_le("upper", pow(z, 2 * n), pow(extremal, big_n)));
  });
}

CertReport certify_bireg(const BipartiteGraph& g, const Graph& h, const ActivitySystem& acts, Budget& budget) {
  const auto degrees = g.biregular_degrees();
  if (!degrees || degrees->first == 0 || degrees->second == 0) {
    throw Error(ErrorCode::not_regular, "G must be (a,b)-biregular with a, b >= 1");
  }
  const auto [a, b] = *degrees;
  auto instance = describe(g, h, std::nullopt);
  instance["a"] = a;
  instance["b"] = b;
  return guarded("bireg", std::move(instance), [&](CertReport& r) {
    const Rational z = partition_fn(g, h, acts, budget);
    const Rational extremal = kab_partition(b, a, h, acts, budget);
    r.values = {{"z_g", to_string(z)}, {"z_kab", to_string(extremal)}};
    r.checks.push_back(compare_le("upper", pow(z, a + b), pow(extremal, g.vertex_count())));
  });
}

CertReport certify_sandwich(const BipartiteGraph& g, const Graph& h, const ActivitySystem& acts, Budget& budget) {
  const auto n = require_regular(g);
  const auto big_n = g.vertex_count();
  return guarded("sandwich", describe(g, h, n), [&](CertReport& r) {
    const auto eta = eta_two_sided(h, acts);
    const Rational z = partition_fn(g, h, acts, budget);
    r.values = {{"z_g", to_string(z)}, {"eta", to_string(eta.value)}, {"eta_a", eta.a}, {"eta_b", eta.b}};
    if (sgn(eta.value) == 0) {
      // No cross-complete pair: H has no edge, so Z vanishes too.
      Comparison lower = compare_eq("lower", Rational(0), z);
      Comparison upper = compare_eq("upper", z, Rational(0));
      if (lower.verdict == Verdict::holds) lower.verdict = upper.verdict = Verdict::vacuous;
      r.checks.push_back(std::move(lower));
      r.checks.push_back(std::move(upper));
      return;
    }
    r.checks.push_back(compare_le("lower", pow(eta.value, big_n), pow(z, 2)));
    const Rational cap = pow(eta.value, n * big_n) * Rational(pow(BigCount(2), h.vertex_count() * big_n));
    r.checks.push_back(compare_le("upper", pow(z, 2 * n), cap));
  });
}

CertReport certify_nonbipartite_lower(const Graph& g, const Graph& h, Budget& budget) {
  std::size_t n = g.vertex_count() == 0 ? 0 : g.degree(0);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) != n || g.has_loop(v)) n = 0;
  }
  if (n == 0) throw Error(ErrorCode::not_regular, "G must be loopless n-regular with n >= 1");
  Json instance{{"N", g.vertex_count()}, {"n", n}, {"h_vertices", h.vertex_count()}};
  auto report = guarded("nonbipartite_lower", std::move(instance), [&](CertReport& r) {
    const auto eta = eta_unweighted(h);
    const BigCount count = count_homs(g, h, budget);
    r.values = {{"hom_g", to_string(count)}, {"eta", to_string(eta.value)}};
    r.checks.push_back(compare_le("lower", pow(eta.value, g.vertex_count()), Rational(pow(count, 2))));
  });
  report.expected_violation = true;
  return report;
}

CertReport certify_lift_identity(const BipartiteGraph& g, const Graph& h, const ActivitySystem& acts,
                                 Budget& budget) {
  return guarded("lift_identity", describe(g, h, g.regular_degree()), [&](CertReport& r) {
    const Rational z = partition_fn(g, h, acts, budget);
    const auto [target, meta] = blowup(h, acts);
    const BigCount lifted = count_homs_restricted(g, target, budget);
    r.values = {{"z_g", to_string(z)},
                {"scale", to_string(meta.scale)},
                {"blowup_vertices", target.graph.vertex_count()}};
    r.checks.push_back(compare_eq("identity", z * Rational(pow(meta.scale, g.vertex_count())), Rational(lifted)));
  });
}

CertReport certify_double_identity(const BipartiteGraph& g, const Graph& h, Budget& budget) {
  return guarded("double_identity", describe(g, h, g.regular_degree()), [&](CertReport& r) {
    const BigCount direct = count_homs(g.graph(), h, budget);
    const BigCount doubled = count_homs_restricted(g, double_graph(h), budget);
    r.checks.push_back(compare_eq("identity", Rational(direct), Rational(doubled)));
  });
}

}  // namespace homcert
