// homcert command-line front end. Every subcommand is a thin wrapper over
// the C API in homcert/homcert.h.

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "homcert/homcert.h"
#include "json.hpp"

namespace {

using Json = nlohmann::json;
namespace fs = std::filesystem;

constexpr int kExitInput = 2;
constexpr int kExitBudget = 3;

// Raised for any failed call; carries the status and message for the
// {"error": ...} document.
struct Failure {
  std::string code;
  std::string message;
  int exit_code;
};

struct ContextDeleter {
  void operator()(homcert_context* c) const { homcert_context_free(c); }
};
struct GraphDeleter {
  void operator()(homcert_graph* g) const { homcert_graph_free(g); }
};
struct TargetDeleter {
  void operator()(homcert_target* t) const { homcert_target_free(t); }
};
struct ActivitiesDeleter {
  void operator()(homcert_activities* a) const { homcert_activities_free(a); }
};
using ContextPtr = std::unique_ptr<homcert_context, ContextDeleter>;
using GraphPtr = std::unique_ptr<homcert_graph, GraphDeleter>;
using TargetPtr = std::unique_ptr<homcert_target, TargetDeleter>;
using ActivitiesPtr = std::unique_ptr<homcert_activities, ActivitiesDeleter>;

void check(homcert_context* ctx, homcert_status status) {
  if (status == HOMCERT_OK) return;
  const bool resource = status == HOMCERT_ERROR_BUDGET_EXCEEDED || status == HOMCERT_ERROR_CAP_EXCEEDED;
  throw Failure{homcert_status_name(status), homcert_context_last_error(ctx), resource ? kExitBudget : kExitInput};
}

std::string take(char* str) {
  std::string out = str != nullptr ? str : "";
  homcert_string_free(str);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Failure{"invalid_input", "cannot read " + path, kExitInput};
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

struct Options {
  std::string graph_path;
  std::string target_graph_path;
  std::string two_sorted_path;
  std::string activities_path;
  std::string config_path;
  std::string proposition;
  std::string output_path;
  std::string family;
  std::optional<std::size_t> n;
  std::size_t e_side = 0;
  std::size_t o_side = 0;
  std::size_t length = 0;
  std::size_t dimension = 0;
  std::size_t half = 0;
  std::size_t domain = 0;
  std::size_t codomain = 0;
  std::uint64_t seed = 20240601;
  std::optional<std::uint64_t> budget;
  unsigned threads = 1;
  bool independent_sets = false;
  bool surjections = false;
  bool strict = false;
};

class Runner {
 public:
  explicit Runner(const Options& opt) : opt_(opt) {
    homcert_context* raw = nullptr;
    if (homcert_context_create(&raw) != HOMCERT_OK) throw Failure{"out_of_memory", "context", kExitInput};
    ctx_.reset(raw);
    std::optional<std::uint64_t> budget = opt.budget;
    if (!budget) {
      if (const char* env = std::getenv("HOMCERT_BUDGET")) {
        try {
          budget = std::stoull(env);
        } catch (const std::exception&) {
          throw Failure{"invalid_input", "HOMCERT_BUDGET is not an integer", kExitInput};
        }
      }
    }
    if (budget) check(ctx(), homcert_context_set_budget(ctx(), *budget));
    check(ctx(), homcert_context_set_threads(ctx(), opt.threads));
  }

  homcert_context* ctx() const { return ctx_.get(); }

  // -g accepts a graph file or an instance-spec file; --n overrides the
  // degree/side parameter of a spec.
  GraphPtr source() const {
    if (opt_.graph_path.empty()) throw Failure{"usage", "-g is required", kExitInput};
    const std::string text = read_file(opt_.graph_path);
    Json doc;
    try {
      doc = Json::parse(text);
    } catch (const Json::parse_error& e) {
      throw Failure{"invalid_input", e.what(), kExitInput};
    }
    homcert_graph* raw = nullptr;
    if (doc.is_object() && doc.contains("family")) {
      if (opt_.n) apply_n(doc);
      const auto base = fs::path(opt_.graph_path).parent_path().string();
      check(ctx(), homcert_instance_build(ctx(), doc.dump().c_str(), base.c_str(), &raw));
    } else {
      if (opt_.n) throw Failure{"usage", "--n applies only to instance-spec files", kExitInput};
      check(ctx(), homcert_graph_parse(ctx(), text.c_str(), &raw));
    }
    return GraphPtr(raw);
  }

  GraphPtr target_graph() const {
    if (opt_.target_graph_path.empty()) throw Failure{"usage", "-H is required", kExitInput};
    homcert_graph* raw = nullptr;
    check(ctx(), homcert_graph_parse(ctx(), read_file(opt_.target_graph_path).c_str(), &raw));
    return GraphPtr(raw);
  }

  TargetPtr two_sorted() const {
    homcert_target* raw = nullptr;
    check(ctx(), homcert_target_parse(ctx(), read_file(opt_.two_sorted_path).c_str(), &raw));
    return TargetPtr(raw);
  }

  ActivitiesPtr activities() const {
    if (opt_.activities_path.empty()) return nullptr;
    homcert_activities* raw = nullptr;
    check(ctx(), homcert_activities_parse(ctx(), read_file(opt_.activities_path).c_str(), &raw));
    return ActivitiesPtr(raw);
  }

 private:
  void apply_n(Json& doc) const {
    const auto family = doc.value("family", std::string{});
    const auto n = *opt_.n;
    if (family == "complete-bipartite") {
      doc["a"] = n;
      doc["b"] = n;
    } else if (family == "random-regular") {
      doc["n"] = n;
    } else if (family == "hypercube") {
      doc["d"] = n;
    } else {
      throw Failure{"usage", "--n does not apply to family '" + family + "'", kExitInput};
    }
  }

  const Options& opt_;
  ContextPtr ctx_;
};

std::string run_count(const Runner& r, const Options& opt) {
  char* out = nullptr;
  if (opt.surjections) {
    check(r.ctx(), homcert_surjection_count(r.ctx(), opt.domain, opt.codomain, &out));
  } else if (opt.independent_sets) {
    auto g = r.source();
    check(r.ctx(), homcert_count_independent_sets(r.ctx(), g.get(), &out));
  } else {
    auto g = r.source();
    auto h = r.target_graph();
    check(r.ctx(), homcert_count_homs(r.ctx(), g.get(), h.get(), &out));
  }
  return Json{{"count", take(out)}}.dump();
}

std::string run_partition(const Runner& r) {
  auto g = r.source();
  auto h = r.target_graph();
  auto acts = r.activities();
  char* out = nullptr;
  check(r.ctx(), homcert_partition_fn(r.ctx(), g.get(), h.get(), acts.get(), &out));
  return Json{{"value", take(out)}}.dump();
}

std::string run_restricted(const Runner& r) {
  auto g = r.source();
  auto t = r.two_sorted();
  char* out = nullptr;
  check(r.ctx(), homcert_count_homs_restricted(r.ctx(), g.get(), t.get(), &out));
  return Json{{"count", take(out)}}.dump();
}

std::string run_knn(const Runner& r, const Options& opt) {
  if (!opt.n) throw Failure{"usage", "knn needs --n", kExitInput};
  char* out = nullptr;
  if (!opt.two_sorted_path.empty()) {
    auto t = r.two_sorted();
    check(r.ctx(), homcert_knn_restricted_count(r.ctx(), *opt.n, t.get(), &out));
    return Json{{"count", take(out)}}.dump();
  }
  auto h = r.target_graph();
  auto acts = r.activities();
  check(r.ctx(), homcert_knn_partition(r.ctx(), *opt.n, h.get(), acts.get(), &out));
  return Json{{"value", take(out)}}.dump();
}

std::string run_kab(const Runner& r, const Options& opt) {
  auto h = r.target_graph();
  auto acts = r.activities();
  char* out = nullptr;
  check(r.ctx(), homcert_kab_partition(r.ctx(), opt.e_side, opt.o_side, h.get(), acts.get(), &out));
  return Json{{"value", take(out)}}.dump();
}

std::string run_eta(const Runner& r) {
  auto h = r.target_graph();
  auto acts = r.activities();
  char* out = nullptr;
  check(r.ctx(), homcert_eta(r.ctx(), h.get(), acts.get(), &out));
  return take(out);
}

std::string run_double(const Runner& r) {
  auto h = r.target_graph();
  homcert_target* raw = nullptr;
  check(r.ctx(), homcert_double(r.ctx(), h.get(), &raw));
  TargetPtr t(raw);
  char* out = nullptr;
  check(r.ctx(), homcert_target_to_json(r.ctx(), t.get(), &out));
  return take(out);
}

std::string run_blowup(const Runner& r) {
  auto h = r.target_graph();
  auto acts = r.activities();
  homcert_target* raw = nullptr;
  char* scale = nullptr;
  check(r.ctx(), homcert_blowup(r.ctx(), h.get(), acts.get(), &raw, &scale));
  TargetPtr t(raw);
  const std::string scale_text = take(scale);
  char* out = nullptr;
  check(r.ctx(), homcert_target_to_json(r.ctx(), t.get(), &out));
  Json doc = Json::parse(take(out));
  doc["scale"] = scale_text;
  return doc.dump();
}

// Returns the process exit code; output goes to `text`.
int run_certify(const Runner& r, const Options& opt, std::string& text) {
  if (!opt.config_path.empty()) {
    const auto base = fs::path(opt.config_path).parent_path().string();
    char* out = nullptr;
    int code = 0;
    check(r.ctx(), homcert_campaign_run(r.ctx(), read_file(opt.config_path).c_str(), base.c_str(), opt.strict ? 1 : 0,
                                        &out, &code));
    text = take(out);
    return code;
  }
  if (opt.proposition.empty()) throw Failure{"usage", "certify needs --config or --prop", kExitInput};
  auto g = r.source();
  auto h = r.target_graph();
  auto acts = r.activities();
  char* out = nullptr;
  check(r.ctx(), homcert_certify(r.ctx(), opt.proposition.c_str(), g.get(), h.get(), acts.get(), &out));
  const Json report = Json::parse(take(out));
  text = report.dump() + "\n";
  const auto verdict = report.at("verdict").get<std::string>();
  if (verdict == "violated" && !report.at("expected_violation").get<bool>()) return 1;
  if (verdict == "skipped-budget" && opt.strict) return kExitBudget;
  return 0;
}

std::string run_generate(const Runner& r, const Options& opt) {
  Json spec{{"family", opt.family}};
  if (opt.family == "complete-bipartite") {
    spec["a"] = opt.e_side;
    spec["b"] = opt.o_side;
  } else if (opt.family == "cycle") {
    spec["length"] = opt.length;
  } else if (opt.family == "hypercube") {
    spec["d"] = opt.dimension;
  } else if (opt.family == "random-regular") {
    if (!opt.n) throw Failure{"usage", "random-regular needs --n", kExitInput};
    spec["n"] = *opt.n;
    spec["half"] = opt.half;
    spec["seed"] = opt.seed;
  } else {
    throw Failure{"usage", "unknown family '" + opt.family + "'", kExitInput};
  }
  homcert_graph* raw = nullptr;
  check(r.ctx(), homcert_instance_build(r.ctx(), spec.dump().c_str(), nullptr, &raw));
  GraphPtr g(raw);
  char* out = nullptr;
  check(r.ctx(), homcert_graph_to_json(r.ctx(), g.get(), &out));
  return take(out);
}

void emit(const Options& opt, const std::string& text) {
  const std::string body = text.empty() || text.back() == '\n' ? text : text + "\n";
  if (opt.output_path.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream out(opt.output_path, std::ios::binary);
  if (!out) throw Failure{"invalid_input", "cannot write " + opt.output_path, kExitInput};
  out << body;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact homomorphism counting and bound certification"};
  app.require_subcommand(1);
  Options opt;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--budget", opt.budget, "Node-expansion budget (overrides HOMCERT_BUDGET)");
    sub->add_option("--threads", opt.threads, "Worker threads for campaigns")->check(CLI::Range(1U, 256U));
    sub->add_option("-o,--output", opt.output_path, "Write output here instead of stdout");
  };
  auto source_opt = [&](CLI::App* sub) {
    sub->add_option("-g,--graph", opt.graph_path, "Source graph file or instance-spec file");
    sub->add_option("--n", opt.n, "Side size / degree");
  };
  auto target_opt = [&](CLI::App* sub) { sub->add_option("-H,--target", opt.target_graph_path, "Target graph file"); };
  auto acts_opt = [&](CLI::App* sub) { sub->add_option("-a,--activities", opt.activities_path, "Activity file"); };

  auto* count = app.add_subcommand("count", "|Hom(G,H)|, |I(G)| or surjection counts");
  source_opt(count);
  target_opt(count);
  count->add_flag("--independent-sets", opt.independent_sets, "Count independent sets of G");
  count->add_flag("--surjections", opt.surjections, "Count surjections [domain] -> [codomain]");
  count->add_option("--domain", opt.domain);
  count->add_option("--codomain", opt.codomain);
  common(count);

  auto* partition = app.add_subcommand("partition", "Z^(Lambda,M)(G,H) by exhaustive search");
  source_opt(partition);
  target_opt(partition);
  acts_opt(partition);
  common(partition);

  auto* restricted = app.add_subcommand("restricted", "|Hom^{U,L}(G,T)| for a two-sorted target");
  source_opt(restricted);
  restricted->add_option("-T,--two-sorted", opt.two_sorted_path, "Two-sorted target file")->required();
  common(restricted);

  auto* knn = app.add_subcommand("knn", "K_{n,n} closed form");
  knn->add_option("--n", opt.n, "Side size")->required();
  target_opt(knn);
  acts_opt(knn);
  knn->add_option("-T,--two-sorted", opt.two_sorted_path, "Two-sorted target (unweighted restricted count)");
  common(knn);

  auto* kab = app.add_subcommand("kab", "K_{a,b} closed form (class E is the a-side)");
  kab->add_option("--e-side", opt.e_side, "a")->required();
  kab->add_option("--o-side", opt.o_side, "b")->required();
  target_opt(kab);
  acts_opt(kab);
  common(kab);

  auto* eta = app.add_subcommand("eta", "eta(H) with an optimal witness");
  target_opt(eta);
  acts_opt(eta);
  common(eta);

  auto* dbl = app.add_subcommand("double", "Bipartite double of H");
  target_opt(dbl);
  common(dbl);

  auto* blow = app.add_subcommand("blowup", "Activity blow-up of H, with scale constant");
  target_opt(blow);
  acts_opt(blow);
  common(blow);

  auto* certify = app.add_subcommand("certify", "Run a campaign or a single check");
  certify->add_option("--config", opt.config_path, "Campaign config file");
  certify->add_option("--prop", opt.proposition, "Single check id");
  certify->add_flag("--strict", opt.strict, "Exit 3 if any check was skipped for budget");
  source_opt(certify);
  target_opt(certify);
  acts_opt(certify);
  common(certify);

  auto* generate = app.add_subcommand("generate", "Emit a generated bipartite graph");
  generate->add_option("--family", opt.family, "complete-bipartite | cycle | hypercube | random-regular")->required();
  generate->add_option("--e-side", opt.e_side);
  generate->add_option("--o-side", opt.o_side);
  generate->add_option("--length", opt.length);
  generate->add_option("--dim", opt.dimension);
  generate->add_option("--n", opt.n);
  generate->add_option("--half", opt.half);
  generate->add_option("--seed", opt.seed, "Default 20240601");
  common(generate);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    Runner runner(opt);
    std::string text;
    int code = 0;
    if (*count) {
      text = run_count(runner, opt);
    } else if (*partition) {
      text = run_partition(runner);
    } else if (*restricted) {
      text = run_restricted(runner);
    } else if (*knn) {
      text = run_knn(runner, opt);
    } else if (*kab) {
      text = run_kab(runner, opt);
    } else if (*eta) {
      text = run_eta(runner);
    } else if (*dbl) {
      text = run_double(runner);
    } else if (*blow) {
      text = run_blowup(runner);
    } else if (*certify) {
      code = run_certify(runner, opt, text);
    } else {
      text = run_generate(runner, opt);
    }
    emit(opt, text);
    return code;
  } catch (const Failure& f) {
    std::cout << Json{{"error", {{"code", f.code}, {"message", f.message}}}}.dump() << "\n";
    return f.exit_code;
  }
}
