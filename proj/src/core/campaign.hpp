#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "core/certify.hpp"
#include "core/graph_io.hpp"

namespace homcert {

inline constexpr std::uint64_t kDefaultSeed = 20240601;

/// Proposition ids understood by campaigns.
const std::vector<std::string>& proposition_ids();

/// A parsed campaign. Top-level shape:
///   {"propositions": [id | {"id", "families"?, "grids"?, "trials"?}, ...],
///    "families": [instance spec, ...], "grids": {"targets": [...],
///    "activities": [...]}, "trials": t, "seed": s, "budget": b}
/// Integer family parameters may be lists; each combination is an instance.
/// Random families run `trials` times with seeds split from `seed`.
struct CampaignConfig {
  Json document;
  std::filesystem::path base_dir;
  std::uint64_t seed = kDefaultSeed;
  std::uint64_t budget = kDefaultBudget;

  /// Throws Error(invalid_config) on unknown keys or bad shapes.
  static CampaignConfig parse(const Json& doc, std::filesystem::path base_dir = {});
};

/// Seed of trial `trial` for parameter combination `combo` of family
/// `family`: splitmix64(master ^ splitmix64(family << 40 | combo << 20 | trial)).
std::uint64_t trial_seed(std::uint64_t master, std::size_t family, std::size_t combo, std::size_t trial);

/// Runs every check of the campaign. Reports come back in job order
/// (proposition, family, combination, trial, target, activities) for any
/// thread count. Hypothesis mismatches (e.g. a non-regular G for hom_ub)
/// throw Error(invalid_config).
std::vector<CertReport> run_campaign(const CampaignConfig& config, unsigned threads = 1);

/// One JSON document per line, each report tagged with its "index".
std::string report_stream(const std::vector<CertReport>& reports);

/// 0 when nothing unexpected was violated, 1 otherwise; 3 instead of 0 when
/// strict and some check was skipped for budget.
int campaign_exit_code(const std::vector<CertReport>& reports, bool strict);

}  // namespace homcert
