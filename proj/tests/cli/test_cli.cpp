#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace fs = std::filesystem;
using Json = nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " '" HOMCERT_CLI "' " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  while (auto n = std::fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string fx(const char* name) { return std::string("'" HOMCERT_FIXTURES "/") + name + "'"; }

Json doc(const Run& r) {
  INFO(r.out);
  return Json::parse(r.out);
}

fs::path scratch(const char* name) {
  const auto dir = fs::temp_directory_path() / "homcert_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

void write(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

}  // namespace

TEST_CASE("count") {
  auto r = run("count -g " + fx("knn.json") + " --n 3 -H " + fx("hind.json"));
  CHECK(r.code == 0);
  CHECK(r.out == "{\"count\":\"15\"}\n");
  CHECK(doc(run("count -g " + fx("c4.json") + " -H " + fx("k3.json"))).at("count") == "18");
  CHECK(doc(run("count -g " + fx("c6.json") + " -H " + fx("k3.json"))).at("count") == "66");
  CHECK(doc(run("count -g " + fx("k3.json") + " -H " + fx("k2.json"))).at("count") == "0");
  CHECK(doc(run("count -g " + fx("c4.json") + " --independent-sets")).at("count") == "7");
  CHECK(doc(run("count --surjections --domain 2 --codomain 2")).at("count") == "2");
}

TEST_CASE("partition, restricted and closed forms") {
  CHECK(doc(run("partition -g " + fx("knn.json") + " -H " + fx("hind.json") + " -a " + fx("hind-lambda2.json")))
            .at("value") == "17");
  const auto target = scratch("double-hind.json");
  const auto dbl = run("double -H " + fx("hind.json") + " -o '" + target.string() + "'");
  CHECK(dbl.code == 0);
  CHECK(doc(run("restricted -g " + fx("knn.json") + " -T '" + target.string() + "'")).at("count") == "7");
  CHECK(doc(run("knn --n 2 -T '" + target.string() + "'")).at("count") == "7");
  CHECK(doc(run("knn --n 2 -H " + fx("k3.json"))).at("value") == "18");
  CHECK(doc(run("knn --n 2 -H " + fx("hind.json") + " -a " + fx("hind-lambda2.json"))).at("value") == "17");
  CHECK(doc(run("kab --e-side 2 --o-side 1 -H " + fx("hind.json"))).at("value") == "5");
}

TEST_CASE("eta, double and blowup") {
  const auto eta = doc(run("eta -H " + fx("k5.json")));
  CHECK(eta.at("value") == "6");
  CHECK(eta.at("A") == Json::array({0, 1}));
  const auto hind = doc(run("eta -H " + fx("hind.json")));
  CHECK(hind.at("B") == Json::array({1}));
  const auto d = doc(run("double -H " + fx("hind.json")));
  CHECK(d.at("upper") == Json::array({0, 1}));
  const auto b = doc(run("blowup -H " + fx("looped-vertex.json") + " -a " + fx("hind-lambda3-2.json")));
  CHECK(b.at("scale") == "2");
  CHECK(b.at("vertices") == 5);
}

TEST_CASE("generate") {
  const auto g = doc(run("generate --family random-regular --n 3 --half 6 --seed 7"));
  CHECK(g.at("vertices") == 12);
  CHECK(g.at("edges").size() == 18);
  CHECK(run("generate --family random-regular --n 3 --half 6").out ==
        run("generate --family random-regular --n 3 --half 6 --seed 20240601").out);
  CHECK(doc(run("generate --family hypercube --dim 3")).at("vertices") == 8);
  CHECK(doc(run("generate --family cycle --length 6")).at("edges").size() == 6);
  CHECK(doc(run("generate --family complete-bipartite --e-side 2 --o-side 3")).at("class_e") == Json::array({0, 1}));
}

TEST_CASE("certify") {
  auto single = run("certify --prop hom_ub -g " + fx("c6.json") + " -H " + fx("k3.json"));
  CHECK(single.code == 0);
  CHECK(doc(single).at("checks")[0].at("lhs") == "18974736");
  auto nb = run("certify --prop nonbipartite_lower -g " + fx("k3.json") + " -H " + fx("k2.json"));
  CHECK(nb.code == 0);
  CHECK(doc(nb).at("verdict") == "violated");

  const auto empty = scratch("empty.json");
  write(empty, "{}");
  auto e = run("certify --config '" + empty.string() + "'");
  CHECK(e.code == 0);
  CHECK(e.out.empty());

  auto strict = run("certify --prop hom_ub --strict --budget 0 -g " + fx("c6.json") + " -H " + fx("k3.json"));
  CHECK(strict.code == 3);
  auto lax = run("certify --prop hom_ub --budget 0 -g " + fx("c6.json") + " -H " + fx("k3.json"));
  CHECK(lax.code == 0);
  CHECK(doc(lax).at("verdict") == "skipped-budget");
}

TEST_CASE("default campaign is byte-identical across thread counts") {
  const auto one = run("certify --config " + fx("default-campaign.json") + " --threads 1");
  const auto eight = run("certify --config " + fx("default-campaign.json") + " --threads 8");
  CHECK(one.code == 0);
  CHECK(eight.code == 0);
  CHECK(one.out == eight.out);
  CHECK(one.out.find("\"verdict\":\"violated\",\"expected_violation\":false") == std::string::npos);
}

TEST_CASE("budget environment variable") {
  const auto args = "count -g " + fx("c6.json") + " -H " + fx("k3.json");
  auto r = run(args, "HOMCERT_BUDGET=1");
  CHECK(r.code == 3);
  CHECK(doc(r).at("error").at("code") == "budget_exceeded");
  CHECK(run(args + " --budget 1000000", "HOMCERT_BUDGET=1").code == 0);
  CHECK(run(args, "HOMCERT_BUDGET=abc").code == 2);
}

TEST_CASE("input errors exit 2 with a machine-readable error") {
  auto missing = run("count -g /nonexistent.json -H " + fx("k3.json"));
  CHECK(missing.code == 2);
  CHECK(doc(missing).contains("error"));
  const auto bad = scratch("bad.json");
  write(bad, R"({"vertices": 2, "edges": [[0, 5]]})");
  auto r = run("eta -H '" + bad.string() + "'");
  CHECK(r.code == 2);
  CHECK(doc(r).at("error").at("code") == "invalid_input");
  CHECK(run("partition -g " + fx("k3.json") + " -H " + fx("k2.json")).code == 2);
  CHECK(run("nosuch").code == 2);
  CHECK(run("").code == 2);
  CHECK(run("certify").code == 2);

  const auto badcfg = scratch("badcfg.json");
  write(badcfg, R"({"propositions": ["nope"]})");
  auto c = run("certify --config '" + badcfg.string() + "'");
  CHECK(c.code == 2);
  CHECK(doc(c).at("error").at("code") == "invalid_config");
}

TEST_CASE("output file") {
  const auto out = scratch("out.json");
  fs::remove(out);
  CHECK(run("eta -H " + fx("k5.json") + " -o '" + out.string() + "'").out.empty());
  std::ifstream in(out);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(Json::parse(text).at("value") == "6");
}
