#pragma once

#include "piercing/bounds.hpp"
#include "piercing/harness.hpp"
#include "piercing/instance_io.hpp"
#include "piercing/solvers.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace piercing {

struct IntRange {
  int lo = 1;
  int hi = 1;
};

// Campaign config document:
//   {"generator": "planted_d_intervals" | "planted_subforests" |
//                 "random_d_intervals" | "random_subforests" | "tw_graph",
//    "count": 100, "seed": 1,
//    "n_edges": [4, 12], "d": [1, 3], "host_size": [8, 16], "k": [1, 2],
//    "coord_denominator": 1,
//    "params": [{"p": 2, "q": 2}],
//    "kinds": ["DPP_STAR", "ALON"],
//    "threads": 1}
// or {"files": ["a.json", ...], "params": [...], "kinds": [...]}.
// Integer fields given as a single number mean a one-point range.
// Instance i uses seed + i; its sizes are drawn from the ranges with that
// seed and its (p,q) is params[i % params.size()].
struct CampaignConfig {
  std::string generator;
  int count = 0;
  std::uint64_t seed = 1;
  IntRange n_edges{4, 12};
  IntRange d{1, 3};
  IntRange host_size{8, 16};
  IntRange k{1, 2};
  int coord_denominator = 1;
  std::vector<PQParameters> params{{2, 2}};
  std::vector<BoundKind> kinds;
  std::vector<std::string> files;
  int threads = 1;
};

// Throws InvalidInstance with a JSON pointer on malformed config.
CampaignConfig parse_campaign_config(const nlohmann::json& doc);

struct CampaignEntry {
  std::uint64_t seed = 0;
  PQParameters params;
  AnyFamily family;
  std::vector<BoundReport> reports;
};

struct KindSummary {
  int instances = 0;
  int applicable = 0;
  int satisfied = 0;
  int violated = 0;
  double max_ratio = 0;  // measured / bound over applicable reports
};

struct CampaignResult {
  std::vector<CampaignEntry> entries;  // ordered by seed
  std::vector<std::pair<BoundKind, KindSummary>> summary;
  int violations = 0;
  double runtime_ms = 0;
};

// One instance of the campaign's generator, as seeded by index i.
CampaignEntry campaign_instance(const CampaignConfig& config, int index);

CampaignResult run_campaign(const CampaignConfig& config);

// Reports sorted by seed. Entries with a violated report carry the full
// instance under "instance" for replay.
nlohmann::json to_json(const CampaignResult& result);

}  // namespace piercing
