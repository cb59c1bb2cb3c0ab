#include "piercing/campaign.hpp"
#include "piercing/errors.hpp"
#include "piercing/generators.hpp"
#include "piercing/harness.hpp"
#include "piercing/instance_io.hpp"
#include "piercing/solvers.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace piercing;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kViolated = 1;
constexpr int kInvalid = 2;

void emit(const json& doc, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << doc.dump(2) << "\n";
  } else {
    std::ofstream out(out_path);
    if (!out) throw InvalidInstance(out_path, "cannot write file");
    out << doc.dump(2) << "\n";
  }
}

struct GenArgs {
  std::string family = "intervals";
  std::uint64_t seed = 1;
  int n = 8;
  int d = 2;
  int den = 1;
  int host_size = 12;
  int p = 2;
  int q = 2;
  int dim = 2;
  int prime = 2;
  int k = 1;
  std::string out;
};

int run_gen(const GenArgs& a) {
  GenConfig cfg{a.seed, a.n, a.d, a.den, a.host_size};
  const PQParameters pq{a.p, a.q};
  json doc;
  if (a.family == "intervals") {
    doc = to_json(random_d_intervals(cfg));
  } else if (a.family == "planted-intervals") {
    doc = to_json(planted_pq_family(cfg, pq));
  } else if (a.family == "trees") {
    doc = to_json(random_subforests(random_tree(cfg), cfg));
  } else if (a.family == "planted-trees") {
    doc = to_json(planted_pq_subforests(random_tree(cfg), cfg, pq));
  } else if (a.family == "projective") {
    doc = to_json(projective_instance(ProjectiveParams{a.dim, a.prime}).realization);
  } else if (a.family == "tw") {
    doc = to_json(random_tw_graph(cfg, a.k));
  } else {
    throw BadParams("unknown family '" + a.family + "'");
  }
  emit(doc, a.out);
  return kOk;
}

int run_solve(const std::string& path) {
  const auto family = load_instance(path);
  const auto instance = incidence_of(family);
  const auto m = measure(instance);
  emit(to_json(m, instance), "");
  return kOk;
}

int run_check_pq(const std::string& path, int p, int q) {
  const auto instance = incidence_of(load_instance(path));
  const auto v = pq_check(instance, PQParameters{p, q});
  json doc = {{"p", p}, {"q", q}, {"holds", v.holds}, {"vacuous", v.vacuous}, {"r", v.max_depth},
              {"subsets_checked", v.subsets_checked}};
  if (v.counterexample) doc["counterexample"] = *v.counterexample;
  emit(doc, "");
  return kOk;
}

int run_verify(const std::string& path, const std::string& kind_name, int p, int q, std::optional<int> k) {
  const auto kind = parse_bound_kind(kind_name);
  if (!kind) throw BadParams("unknown bound kind '" + kind_name + "'");
  const auto report = verify_instance(load_instance(path), *kind, VerifyParams{p, q, k, 0});
  emit(to_json(report), "");
  return report.applicable && !report.satisfied ? kViolated : kOk;
}

int run_campaign_cmd(const std::string& path, const std::string& out) {
  std::ifstream in(path);
  if (!in) throw InvalidInstance(path, "cannot open file");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw InvalidInstance(path, e.what());
  }
  const auto result = run_campaign(parse_campaign_config(doc));
  emit(to_json(result), out);
  std::cerr << "campaign: " << result.entries.size() << " instances, " << result.violations << " violations, "
            << static_cast<long>(result.runtime_ms) << " ms\n";
  return result.violations > 0 ? kViolated : kOk;
}

int run_sharpness(int dim, const std::vector<int>& primes, bool as_json) {
  const auto rows = sharpness_probe(dim, primes);
  bool ok = true;
  json doc = json::array();
  if (!as_json) std::printf("%4s %6s %7s %14s %10s %6s %6s\n", "q", "d", "points", "tau*", "ratio", "exact", "lower");
  for (const auto& r : rows) {
    ok = ok && r.exact_match && r.lower_bound_ok && r.duality_certified;
    if (as_json) {
      doc.push_back(to_json(r));
    } else {
      std::printf("%4d %6d %7d %14s %10.6f %6s %6s\n", r.field_order, r.d, r.points, to_string(r.tau_star).c_str(),
                  r.ratio, r.exact_match ? "yes" : "NO", r.lower_bound_ok ? "yes" : "NO");
    }
  }
  if (as_json) emit(doc, "");
  return ok ? kOk : kViolated;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact piercing numbers of d-interval and d-tree families under the (p,q) property"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Emit a generated instance file");
  gen_cmd->add_option("--family", gen.family, "intervals | planted-intervals | trees | planted-trees | projective | tw");
  gen_cmd->add_option("--seed", gen.seed);
  gen_cmd->add_option("--n", gen.n, "Number of edges");
  gen_cmd->add_option("--d", gen.d, "Parts / components per edge");
  gen_cmd->add_option("--den", gen.den, "Coordinate denominator");
  gen_cmd->add_option("--host-size", gen.host_size, "Host tree / graph vertex count");
  gen_cmd->add_option("--p", gen.p);
  gen_cmd->add_option("--q", gen.q);
  gen_cmd->add_option("--dim", gen.dim, "Projective dimension k");
  gen_cmd->add_option("--prime", gen.prime, "Field order (prime)");
  gen_cmd->add_option("--k", gen.k, "Tree-width bound");
  gen_cmd->add_option("-o,--out", gen.out, "Output file (default stdout)");

  std::string path;
  auto* solve_cmd = app.add_subcommand("solve", "Exact nu, tau, tau* with witnesses");
  solve_cmd->add_option("file", path)->required();

  int p = 2;
  int q = 2;
  auto* pq_cmd = app.add_subcommand("check-pq", "Decide the (p,q) property");
  pq_cmd->add_option("file", path)->required();
  pq_cmd->add_option("--p", p)->required();
  pq_cmd->add_option("--q", q)->required();

  std::string kind;
  std::optional<int> k;
  auto* verify_cmd = app.add_subcommand("verify", "Check one bound on one instance");
  verify_cmd->add_option("file", path)->required();
  verify_cmd->add_option("--kind", kind)->required();
  verify_cmd->add_option("--p", p)->required();
  verify_cmd->add_option("--q", q);
  verify_cmd->add_option("--k", k);

  std::string config;
  std::string out;
  auto* campaign_cmd = app.add_subcommand("campaign", "Run a verification campaign");
  campaign_cmd->add_option("--config", config)->required();
  campaign_cmd->add_option("-o,--out", out, "Report file (default stdout)");

  int dim = 2;
  std::vector<int> primes;
  bool as_json = false;
  auto* sharp_cmd = app.add_subcommand("sharpness", "tau* of projective instances against the closed form");
  sharp_cmd->add_option("--dim", dim)->required();
  sharp_cmd->add_option("--primes", primes)->required()->delimiter(',');
  sharp_cmd->add_flag("--json", as_json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInvalid;
  }

  try {
    if (*gen_cmd) return run_gen(gen);
    if (*solve_cmd) return run_solve(path);
    if (*pq_cmd) return run_check_pq(path, p, q);
    if (*verify_cmd) return run_verify(path, kind, p, verify_cmd->count("--q") ? q : p, k);
    if (*campaign_cmd) return run_campaign_cmd(config, out);
    if (*sharp_cmd) return run_sharpness(dim, primes, as_json);
  } catch (const InvalidInstance& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kInvalid;
  } catch (const BadParams& e) {
    std::cerr << "bad parameters: " << e.what() << "\n";
    return kInvalid;
  } catch (const NotPrime& e) {
    std::cerr << "bad parameters: " << e.what() << "\n";
    return kInvalid;
  }
  return kInvalid;
}
