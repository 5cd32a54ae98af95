#pragma once

#include <optional>
#include <string>
#include <vector>

#include "core/activities.hpp"
#include "core/graph.hpp"
#include "core/graph_io.hpp"
#include "core/hom_count.hpp"
#include "core/numeric.hpp"

namespace homcert {

enum class Verdict { holds, violated, vacuous, skipped_budget };

const char* to_string(Verdict v) noexcept;

/// One exact comparison. Inequalities are stated after raising both sides
/// to integer powers, e.g. Z(G)^(2n) <= Z(K_{n,n})^N.
struct Comparison {
  std::string name;
  std::string relation;  // "<=" or "=="
  Rational lhs;
  Rational rhs;
  Verdict verdict = Verdict::holds;
  bool equality = false;

  /// rhs / lhs when lhs > 0.
  std::optional<Rational> slack() const;
};

struct CertReport {
  std::string proposition;
  Json instance = Json::object();
  Json values = Json::object();
  std::vector<Comparison> checks;
  Verdict verdict = Verdict::holds;
  bool expected_violation = false;
  std::string note;

  /// True for a violation that is not the documented non-bipartite failure.
  bool unexpected_violation() const { return verdict == Verdict::violated && !expected_violation; }
};

Json to_json(const CertReport& report);

// Each certify_* returns verdict skipped_budget when the node budget or a
// subset cap runs out. A G that fails the stated regularity hypothesis is
// an input error (Error(not_regular)), not a verdict.

/// |Hom(g,h)|^(2n) <= |Hom(K_{n,n},h)|^N, g n-regular, n >= 1.
CertReport certify_hom_ub(const BipartiteGraph& g, const Graph& h, Budget& budget);

/// Z(g)^(2n) <= Z(K_{n,n})^N.
CertReport certify_weighted_ub(const BipartiteGraph& g, const Graph& h, const ActivitySystem& acts,
                               Budget& budget);

/// g (a,b)-biregular: Z(g)^(a+b) <= Z(K)^N where K is complete bipartite
/// with the same degrees on each class (|E_K| = b, |O_K| = a).
CertReport certify_bireg(const BipartiteGraph& g, const Graph& h, const ActivitySystem& acts, Budget& budget);

/// lower: eta^N <= Z^2; upper: Z^(2n) <= eta^(nN) * 2^(|V(h)| N).
CertReport certify_sandwich(const BipartiteGraph& g, const Graph& h, const ActivitySystem& acts, Budget& budget);

/// The lower sandwich bound for a regular graph that is not bipartite, unit
/// activities. Always flagged expected_violation.
CertReport certify_nonbipartite_lower(const Graph& g, const Graph& h, Budget& budget);

/// Z(g,h) * C^N == |Hom^{U,L}(g, blowup(h))|.
CertReport certify_lift_identity(const BipartiteGraph& g, const Graph& h, const ActivitySystem& acts,
                                 Budget& budget);

/// |Hom(g,h)| == |Hom^{U,L}(g, double(h))|.
CertReport certify_double_identity(const BipartiteGraph& g, const Graph& h, Budget& budget);

}  // namespace homcert
