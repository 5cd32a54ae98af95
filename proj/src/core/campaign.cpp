#include "core/campaign.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <fstream>
#include <sstream>
#include <thread>

#include "core/error.hpp"
#include "core/generators.hpp"
#include "core/targets.hpp"

namespace homcert {

const std::vector<std::string>& proposition_ids() {
  static const std::vector<std::string> ids{"hom_ub",        "weighted_ub",     "bireg",
                                            "sandwich",      "lift_identity",   "double_identity",
                                            "nonbipartite_lower"};
  return ids;
}

namespace {

[[noreturn]] void config_error(const std::string& message) { throw Error(ErrorCode::invalid_config, message); }

bool uses_activities(const std::string& prop) {
  return prop == "weighted_ub" || prop == "bireg" || prop == "sandwich" || prop == "lift_identity";
}

void check_keys(const Json& doc, std::initializer_list<std::string_view> allowed, const char* where) {
  if (!doc.is_object()) config_error(std::string(where) + " must be an object");
  for (const auto& [key, _] : doc.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      config_error("unknown key '" + key + "' in " + where);
    }
  }
}

std::uint64_t as_count(const Json& v, const char* what) {
  if (!v.is_number_integer() || (!v.is_number_unsigned() && v.get<std::int64_t>() < 0)) {
    config_error(std::string(what) + " must be a nonnegative integer");
  }
  return v.get<std::uint64_t>();
}

struct Target {
  Graph graph;
  Json descriptor;
};

struct Activities {
  Json descriptor;
  ActivitySpec spec;
};

struct Entry {
  std::string id;
  Json families;
  std::vector<Target> targets;
  std::vector<Activities> activities;
  std::size_t trials = 1;
};

struct Job {
  const Entry* entry;
  InstanceSpec instance;
  Json g_descriptor;
  std::optional<std::uint64_t> seed;
  std::size_t trial;
  const Target* target;
  const Activities* activities;  // nullptr = unit
};

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) config_error("cannot read " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

Target resolve_target(const Json& ref, const std::filesystem::path& base_dir) {
  if (ref.is_string()) {
    auto g = named_target(ref.get<std::string>());
    if (!g) config_error("unknown target name '" + ref.get<std::string>() + "'");
    return {std::move(*g), ref};
  }
  if (ref.is_object() && ref.contains("path")) {
    check_keys(ref, {"path"}, "target reference");
    const auto path = base_dir / ref.at("path").get<std::string>();
    return {parse_graph(read_file(path)), ref};
  }
  if (ref.is_object()) return {parse_graph_document(ref).graph, ref};
  config_error("targets must be names, {\"path\": ...} or inline graphs");
}

// Expands list-valued integer parameters into one spec per combination.
std::vector<Json> expand_family(const Json& family) {
  static const std::vector<std::string> expandable{"a", "b", "length", "d", "n", "half"};
  std::vector<Json> combos{family};
  for (const auto& key : expandable) {
    if (!family.contains(key) || !family.at(key).is_array()) continue;
    std::vector<Json> next;
    for (const auto& base : combos) {
      for (const auto& value : family.at(key)) {
        Json spec = base;
        spec[key] = value;
        next.push_back(std::move(spec));
      }
    }
    combos = std::move(next);
  }
  return combos;
}

std::vector<Entry> parse_entries(const CampaignConfig& config) {
  const Json& doc = config.document;
  const Json empty_array = Json::array();
  const Json default_families = doc.value("families", empty_array);
  const Json default_grids = doc.value("grids", Json::object());
  const std::size_t default_trials = doc.contains("trials") ? as_count(doc.at("trials"), "trials") : 1;

  std::vector<Entry> entries;
  for (const auto& item : doc.value("propositions", empty_array)) {
    Entry e;
    Json families = default_families;
    Json grids = default_grids;
    e.trials = default_trials;
    if (item.is_string()) {
      e.id = item.get<std::string>();
    } else {
      check_keys(item, {"id", "families", "grids", "trials"}, "proposition entry");
      if (!item.contains("id") || !item.at("id").is_string()) config_error("proposition entry needs an \"id\"");
      e.id = item.at("id").get<std::string>();
      if (item.contains("families")) families = item.at("families");
      if (item.contains("grids")) grids = item.at("grids");
      if (item.contains("trials")) e.trials = as_count(item.at("trials"), "trials");
    }
    const auto& ids = proposition_ids();
    if (std::find(ids.begin(), ids.end(), e.id) == ids.end()) config_error("unknown proposition '" + e.id + "'");
    if (!families.is_array()) config_error("\"families\" must be an array");
    e.families = families;
    check_keys(grids, {"targets", "activities"}, "grids");
    for (const auto& ref : grids.value("targets", empty_array)) e.targets.push_back(resolve_target(ref, config.base_dir));
    if (uses_activities(e.id)) {
      for (const auto& a : grids.value("activities", empty_array)) e.activities.push_back({a, activities_from_json(a)});
    }
    entries.push_back(std::move(e));
  }
  return entries;
}

std::vector<Job> plan_jobs(const std::vector<Entry>& entries, std::uint64_t master) {
  std::vector<Job> jobs;
  for (const auto& e : entries) {
    for (std::size_t f = 0; f < e.families.size(); ++f) {
      const auto combos = expand_family(e.families[f]);
      for (std::size_t c = 0; c < combos.size(); ++c) {
        const InstanceSpec base = parse_instance_spec(combos[c]);
        const bool random = base.family == InstanceSpec::Family::random_regular && !combos[c].contains("seed");
        const std::size_t trials = random ? e.trials : 1;
        for (std::size_t t = 0; t < trials; ++t) {
          InstanceSpec spec = base;
          std::optional<std::uint64_t> seed;
          if (random) {
            seed = trial_seed(master, f, c, t);
            spec.seed = *seed;
          }
          for (const auto& target : e.targets) {
            if (e.activities.empty()) {
              jobs.push_back({&e, spec, to_json(spec), seed, t, &target, nullptr});
            } else {
              for (const auto& acts : e.activities) jobs.push_back({&e, spec, to_json(spec), seed, t, &target, &acts});
            }
          }
        }
      }
    }
  }
  return jobs;
}

CertReport run_job(const Job& job, const std::filesystem::path& base_dir, std::uint64_t budget_limit) {
  Budget budget(budget_limit);
  const auto& prop = job.entry->id;
  const Graph& h = job.target->graph;
  const Instance inst = build_instance(job.instance, base_dir);
  const ActivitySystem acts = job.activities ? job.activities->spec.resolve(h.vertex_count())
                                             : ActivitySystem::unit(h.vertex_count());
  CertReport report;
  if (prop == "nonbipartite_lower") {
    report = certify_nonbipartite_lower(inst.graph, h, budget);
  } else {
    if (!inst.bipartite) config_error(prop + " needs a bipartite G with declared class_e");
    const auto& g = *inst.bipartite;
    if (prop == "hom_ub") {
      report = certify_hom_ub(g, h, budget);
    } else if (prop == "weighted_ub") {
      report = certify_weighted_ub(g, h, acts, budget);
    } else if (prop == "bireg") {
      report = certify_bireg(g, h, acts, budget);
    } else if (prop == "sandwich") {
      report = certify_sandwich(g, h, acts, budget);
    } else if (prop == "lift_identity") {
      report = certify_lift_identity(g, h, acts, budget);
    } else {
      report = certify_double_identity(g, h, budget);
    }
  }
  report.instance["g"] = job.g_descriptor;
  report.instance["h"] = job.target->descriptor;
  report.instance["trial"] = job.trial;
  if (job.seed) report.instance["seed"] = *job.seed;
  if (job.activities) report.instance["activities"] = job.activities->descriptor;
  return report;
}

}  // namespace

CampaignConfig CampaignConfig::parse(const Json& doc, std::filesystem::path base_dir) {
  check_keys(doc, {"propositions", "families", "grids", "trials", "seed", "budget", "description"}, "campaign");
  CampaignConfig config;
  config.document = doc;
  config.base_dir = std::move(base_dir);
  if (doc.contains("seed")) config.seed = as_count(doc.at("seed"), "seed");
  if (doc.contains("budget")) config.budget = as_count(doc.at("budget"), "budget");
  // Validate eagerly so config errors surface before any work.
  try {
    const auto entries = parse_entries(config);
    plan_jobs(entries, config.seed);
    for (const auto& e : entries) {
      for (const auto& family : e.families) {
        for (const auto& combo : expand_family(family)) build_instance(parse_instance_spec(combo), config.base_dir);
      }
    }
  } catch (const Error& e) {
    if (e.code() == ErrorCode::invalid_config) throw;
    config_error(e.what());
  }
  return config;
}

std::uint64_t trial_seed(std::uint64_t master, std::size_t family, std::size_t combo, std::size_t trial) {
  const std::uint64_t key = (static_cast<std::uint64_t>(family) << 40) | (static_cast<std::uint64_t>(combo) << 20) |
                            static_cast<std::uint64_t>(trial);
  return splitmix64(master ^ splitmix64(key));
}

std::vector<CertReport> run_campaign(const CampaignConfig& config, unsigned threads) {
  std::vector<Entry> entries;
  std::vector<Job> jobs;
  try {
    entries = parse_entries(config);
    jobs = plan_jobs(entries, config.seed);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::invalid_config) throw;
    config_error(e.what());
  }

  std::vector<CertReport> reports(jobs.size());
  std::vector<std::exception_ptr> failures(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      try {
        reports[i] = run_job(jobs[i], config.base_dir, config.budget);
      } catch (...) {
        failures[i] = std::current_exception();
      }
    }
  };
  const unsigned count = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(jobs.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < count; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  for (const auto& failure : failures) {
    if (!failure) continue;
    try {
      std::rethrow_exception(failure);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::invalid_config) throw;
      config_error(e.what());
    }
  }
  return reports;
}

std::string report_stream(const std::vector<CertReport>& reports) {
  std::string out;
  for (std::size_t i = 0; i < reports.size(); ++i) {
    Json doc = to_json(reports[i]);
    doc["index"] = i;
    out += dump(doc);
    out += '\n';
  }
  return out;
}

int campaign_exit_code(const std::vector<CertReport>& reports, bool strict) {
  const bool violated = std::any_of(reports.begin(), reports.end(), [](const auto& r) { return r.unexpected_violation(); });
  if (violated) return 1;
  const bool skipped = std::any_of(reports.begin(), reports.end(),
                                   [](const auto& r) { return r.verdict == Verdict::skipped_budget; });
  return strict && skipped ? 3 : 0;
}

}  // namespace homcert
