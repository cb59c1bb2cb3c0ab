#include "piercing/campaign.hpp"

#include "piercing/errors.hpp"
#include "piercing/generators.hpp"
#include "piercing/rng.hpp"

#include <atomic>
#include <chrono>
#include <thread>

namespace piercing {

using nlohmann::json;

namespace {

IntRange range_field(const json& doc, const char* name, IntRange fallback) {
  auto it = doc.find(name);
  if (it == doc.end()) return fallback;
  const std::string where = std::string("/") + name;
  if (it->is_number_integer()) return {it->get<int>(), it->get<int>()};
  if (!it->is_array() || it->size() != 2 || !(*it)[0].is_number_integer() || !(*it)[1].is_number_integer()) {
    throw InvalidInstance(where, "expected an integer or [lo, hi]");
  }
  IntRange r{(*it)[0].get<int>(), (*it)[1].get<int>()};
  if (r.lo > r.hi) throw InvalidInstance(where, "lo exceeds hi");
  return r;
}

int int_field(const json& doc, const char* name, int fallback) {
  auto it = doc.find(name);
  if (it == doc.end()) return fallback;
  if (!it->is_number_integer()) throw InvalidInstance(std::string("/") + name, "expected an integer");
  return it->get<int>();
}

}  // namespace

CampaignConfig parse_campaign_config(const json& doc) {
  if (!doc.is_object()) throw InvalidInstance("", "config must be an object");
  CampaignConfig c;
  if (auto it = doc.find("files"); it != doc.end()) {
    if (!it->is_array()) throw InvalidInstance("/files", "expected an array of paths");
    for (std::size_t i = 0; i < it->size(); ++i) {
      if (!(*it)[i].is_string()) throw InvalidInstance("/files/" + std::to_string(i), "expected a path");
      c.files.push_back((*it)[i].get<std::string>());
    }
    c.count = static_cast<int>(c.files.size());
  } else {
    auto gen = doc.find("generator");
    if (gen == doc.end() || !gen->is_string()) throw InvalidInstance("/generator", "missing generator name");
    c.generator = gen->get<std::string>();
    static const std::vector<std::string> known{"planted_d_intervals", "planted_subforests", "random_d_intervals",
                                                "random_subforests", "tw_graph"};
    if (std::find(known.begin(), known.end(), c.generator) == known.end()) {
      throw InvalidInstance("/generator", "unknown generator '" + c.generator + "'");
    }
    c.count = int_field(doc, "count", 0);
    if (c.count < 0) throw InvalidInstance("/count", "must be nonnegative");
  }
  if (auto it = doc.find("seed"); it != doc.end()) {
    if (!it->is_number_unsigned()) throw InvalidInstance("/seed", "expected a nonnegative integer");
    c.seed = it->get<std::uint64_t>();
  }
  c.n_edges = range_field(doc, "n_edges", c.n_edges);
  c.d = range_field(doc, "d", c.d);
  c.host_size = range_field(doc, "host_size", c.host_size);
  c.k = range_field(doc, "k", c.k);
  c.coord_denominator = int_field(doc, "coord_denominator", c.coord_denominator);
  c.threads = std::max(1, int_field(doc, "threads", c.threads));
  if (auto it = doc.find("params"); it != doc.end()) {
    if (!it->is_array() || it->empty()) throw InvalidInstance("/params", "expected a nonempty array");
    c.params.clear();
    for (std::size_t i = 0; i < it->size(); ++i) {
      const std::string where = "/params/" + std::to_string(i);
      const auto& e = (*it)[i];
      if (!e.is_object() || !e.contains("p") || !e.contains("q") || !e["p"].is_number_integer() ||
          !e["q"].is_number_integer()) {
        throw InvalidInstance(where, "expected {\"p\": int, \"q\": int}");
      }
      PQParameters pq{e["p"].get<int>(), e["q"].get<int>()};
      try {
        validate(pq);
      } catch (const BadParams& err) {
        throw InvalidInstance(where, err.what());
      }
      c.params.push_back(pq);
    }
  }
  auto kinds = doc.find("kinds");
  if (kinds == doc.end() || !kinds->is_array()) throw InvalidInstance("/kinds", "expected an array of bound kinds");
  for (std::size_t i = 0; i < kinds->size(); ++i) {
    const auto& k = (*kinds)[i];
    const auto parsed = k.is_string() ? parse_bound_kind(k.get<std::string>()) : std::nullopt;
    if (!parsed) throw InvalidInstance("/kinds/" + std::to_string(i), "unknown bound kind");
    c.kinds.push_back(*parsed);
  }
  return c;
}

CampaignEntry campaign_instance(const CampaignConfig& config, int index) {
  CampaignEntry entry;
  entry.seed = config.seed + static_cast<std::uint64_t>(index);
  entry.params = config.params[static_cast<std::size_t>(index) % config.params.size()];
  if (!config.files.empty()) {
    entry.family = load_instance(config.files[index]);
    return entry;
  }
  Rng rng(entry.seed);
  GenConfig gen;
  gen.seed = entry.seed;
  gen.n_edges = rng.range(config.n_edges.lo, config.n_edges.hi);
  gen.d = rng.range(config.d.lo, config.d.hi);
  gen.host_size = rng.range(config.host_size.lo, config.host_size.hi);
  gen.coord_denominator = config.coord_denominator;
  const int k = rng.range(config.k.lo, config.k.hi);

  if (config.generator == "planted_d_intervals") {
    entry.family = planted_pq_family(gen, entry.params);
  } else if (config.generator == "random_d_intervals") {
    entry.family = random_d_intervals(gen);
  } else if (config.generator == "planted_subforests") {
    entry.family = planted_pq_subforests(random_tree(gen), gen, entry.params);
  } else if (config.generator == "random_subforests") {
    entry.family = random_subforests(random_tree(gen), gen);
  } else {
    entry.family = random_tw_graph(gen, k);
  }
  return entry;
}

CampaignResult run_campaign(const CampaignConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  CampaignResult result;
  result.entries.resize(config.count);

  std::atomic<int> next{0};
  auto worker = [&] {
    for (int i = next++; i < config.count; i = next++) {
      auto entry = campaign_instance(config, i);
      std::optional<Measurements> cached;
      for (BoundKind kind : config.kinds) {
        VerifyParams vp{entry.params.p, entry.params.q, std::nullopt, entry.seed};
        auto report = verify_instance(entry.family, kind, vp, cached ? &*cached : nullptr);
        if (report.applicable && !cached) cached = report.measured;
        entry.reports.push_back(std::move(report));
      }
      result.entries[i] = std::move(entry);
    }
  };
  const int threads = std::min(config.threads, std::max(1, config.count));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  for (BoundKind kind : config.kinds) result.summary.emplace_back(kind, KindSummary{});
  for (const auto& entry : result.entries) {
    for (std::size_t j = 0; j < entry.reports.size(); ++j) {
      const auto& r = entry.reports[j];
      auto& s = result.summary[j].second;
      ++s.instances;
      if (!r.applicable) continue;
      ++s.applicable;
      if (r.satisfied) {
        ++s.satisfied;
      } else {
        ++s.violated;
        ++result.violations;
      }
      if (r.bound_value > 0) s.max_ratio = std::max(s.max_ratio, static_cast<double>(r.measured_value / r.bound_value));
    }
  }
  result.runtime_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return result;
}

json to_json(const CampaignResult& result) {
  json reports = json::array();
  for (const auto& entry : result.entries) {
    json e = {{"seed", entry.seed}, {"p", entry.params.p}, {"q", entry.params.q}};
    json list = json::array();
    bool violated = false;
    for (const auto& r : entry.reports) {
      list.push_back(to_json(r));
      violated = violated || (r.applicable && !r.satisfied);
    }
    e["reports"] = std::move(list);
    if (violated) e["instance"] = to_json(entry.family);
    reports.push_back(std::move(e));
  }
  json summary = json::object();
  for (const auto& [kind, s] : result.summary) {
    summary[std::string(to_string(kind))] = {{"instances", s.instances},
                                             {"applicable", s.applicable},
                                             {"satisfied", s.satisfied},
                                             {"violated", s.violated},
                                             {"max_ratio", s.max_ratio}};
  }
  return {{"instances", result.entries.size()},
          {"reports", std::move(reports)},
          {"summary", std::move(summary)},
          {"violations", result.violations},
          {"runtime_ms", result.runtime_ms}};
}

}  // namespace piercing
