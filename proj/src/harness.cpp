#include "piercing/harness.hpp"

#include "piercing/errors.hpp"
#include "piercing/generators.hpp"
#include "piercing/simplex.hpp"

#include <algorithm>
#include <set>

namespace piercing {

using nlohmann::json;

namespace {

Real to_real(const Rational& x) {
  return Real(x.get_num().get_str()) / Real(x.get_den().get_str());
}

std::string decimal(const Real& x) { return x.str(25, std::ios_base::fixed); }

bool is_d1_interval_family(const DIntervalFamily& f) {
  return std::all_of(f.edges().begin(), f.edges().end(), [](const DInterval& e) { return e.parts().size() == 1; });
}

}  // namespace

Measurements measure(const HypergraphInstance& instance) {
  Measurements m;
  const auto lp = solve_fractional(instance);
  m.tau_star = lp.cover.value;
  m.nu_star = lp.matching.value;
  m.duality_certified = lp.cover.value == lp.matching.value;
  m.fractional_cover = lp.cover.weights;
  m.fractional_matching = lp.matching.weights;
  const auto cover = covering_number(instance, CoverOptions{static_cast<int>(ceil_to_long(m.tau_star))});
  m.tau = cover.optimum;
  m.cover = cover.witness;
  m.cover_nodes = cover.node_count;
  const auto matching = matching_number(instance);
  m.nu = matching.optimum;
  m.matching = matching.witness;
  m.matching_nodes = matching.node_count;
  m.r = max_depth(instance).r;
  return m;
}

BoundReport verify_instance(const AnyFamily& family, BoundKind kind, const VerifyParams& params,
                            const Measurements* cached) {
  const BoundTraits t = traits(kind);
  BoundReport report;
  report.kind = kind;
  report.p = params.p;
  report.q = t.pp_property ? params.p : params.q;
  if (kind == BoundKind::KAISER_P2) report.q = 2;
  report.d = family_d(family);
  report.seed = params.seed;
  report.cited = t.cited;
  if (const auto* tw = std::get_if<TwInstance>(&family)) report.k = params.k.value_or(tw->k);

  auto inapplicable = [&](std::string why) {
    report.applicable = false;
    report.inapplicable_reason = std::move(why);
    return report;
  };

  const bool is_intervals = std::holds_alternative<DIntervalFamily>(family);
  const bool is_trees = std::holds_alternative<SubforestFamily>(family);
  const bool is_tw = std::holds_alternative<TwInstance>(family);
  switch (t.family) {
    case Family::intervals:
      if (!is_intervals) return inapplicable("kind needs a d-interval family");
      break;
    case Family::trees:
      if (!is_trees) return inapplicable("kind needs a family of subgraphs of a tree");
      break;
    case Family::tw_graph:
      if (!is_tw) return inapplicable("kind needs a tw_graph instance");
      break;
    case Family::intervals_or_trees:
      if (!is_intervals && !is_trees) return inapplicable("kind needs d-intervals or subgraphs of a tree");
      break;
  }

  const HypergraphInstance instance = incidence_of(family);
  if (kind == BoundKind::GALLAI) {
    if (!is_d1_interval_family(std::get<DIntervalFamily>(family))) return inapplicable("GALLAI needs d = 1");
  } else if (kind != BoundKind::ALON) {
    if (is_tw && std::get<TwInstance>(family).decomposition.width > report.k) {
      return inapplicable("decomposition width exceeds k");
    }
    const PQParameters pq{report.p, report.q};
    validate(pq);
    const auto verdict = pq_check(instance, pq);
    if (!verdict.holds) {
      report.counterexample = verdict.counterexample;
      return inapplicable("family fails the (" + std::to_string(pq.p) + "," + std::to_string(pq.q) + ") property");
    }
  }

  report.applicable = true;
  report.measured = cached ? *cached : measure(instance);
  const auto& m = report.measured;
  for (PointId p : m.cover) report.cover_labels.push_back(instance.label(p));

  switch (kind) {
    case BoundKind::ALON: {
      const Rational limit = Rational(report.d) * m.tau_star;
      report.measured_value = m.tau;
      report.bound_value = to_real(limit);
      report.satisfied = Rational(m.tau) <= limit;
      break;
    }
    case BoundKind::GALLAI:
      report.measured_value = m.tau;
      report.bound_value = m.nu;
      report.satisfied = m.tau == m.nu;
      break;
    default: {
      const auto bound = evaluate_bound(kind, report.p, report.q, report.d, report.k);
      report.bound_value = bound.value;
      report.bound_branch = bound.branch;
      report.measured_value = t.measure == Measure::tau_star ? to_real(m.tau_star) : Real(m.tau);
      const Real limit = bound.value + kBoundTolerance;
      report.satisfied = t.strict ? report.measured_value < limit : report.measured_value <= limit;
      break;
    }
  }
  report.slack = report.bound_value - report.measured_value;
  return report;
}

json to_json(const Measurements& m, const HypergraphInstance& instance) {
  json cover = json::array();
  for (PointId p : m.cover) {
    if (instance.provenance == Provenance::interval) {
      cover.push_back(instance.label(p));
    } else {
      cover.push_back(p);
    }
  }
  return {{"nu", m.nu},
          {"tau", m.tau},
          {"tau_star", to_string(m.tau_star)},
          {"witness_cover", std::move(cover)},
          {"witness_matching", m.matching},
          {"r", m.r}};
}

json to_json(const BoundReport& r) {
  json out = {{"kind", std::string(to_string(r.kind))},
              {"p", r.p},
              {"q", r.q},
              {"d", r.d},
              {"seed", r.seed},
              {"applicable", r.applicable}};
  if (r.kind == BoundKind::TW_TAU) out["k"] = r.k;
  if (r.cited) out["cited"] = true;
  if (!r.applicable) {
    out["inapplicable_reason"] = r.inapplicable_reason;
    if (r.counterexample) out["counterexample"] = *r.counterexample;
    return out;
  }
  const auto& m = r.measured;
  out["measured"] = {{"nu", m.nu}, {"tau", m.tau}, {"tau_star", to_string(m.tau_star)}, {"r", m.r}};
  out["duality_certified"] = m.duality_certified;
  out["bound_value"] = static_cast<double>(r.bound_value);
  out["bound_value_decimal"] = decimal(r.bound_value);
  if (!r.bound_branch.empty()) out["bound_branch"] = r.bound_branch;
  out["satisfied"] = r.satisfied;
  out["slack"] = static_cast<double>(r.slack);
  out["witness_cover"] = r.cover_labels;
  out["witness_matching"] = m.matching;
  return out;
}

bool heavy_vertex_bound_met(int degree, int p, std::size_t k, std::size_t n) {
  if (k < n) return degree >= 1;
  if (degree < 1) return false;
  mpz_class lhs;
  mpz_ui_pow_ui(lhs.get_mpz_t(), static_cast<unsigned long>(degree - 1), static_cast<unsigned long>(p - 1));
  lhs *= static_cast<unsigned long>(n);
  mpz_class factorial;
  mpz_fac_ui(factorial.get_mpz_t(), static_cast<unsigned long>(p - 1));
  return lhs >= factorial * static_cast<unsigned long>(k);
}

HeavyVertexResult heavy_vertex(const HostTree& host, const std::vector<VertexSet>& subtrees, int p,
                               const std::vector<std::vector<std::size_t>>& intersecting_p_subsets) {
  if (p < 2) throw BadParams("heavy_vertex needs p >= 2");
  const std::size_t n = subtrees.size();
  const std::size_t k = intersecting_p_subsets.size();
  if (k == 0) throw EmptySubfamily("no intersecting p-subsets given");

  std::vector<VertexSet> trees;
  for (std::size_t i = 0; i < n; ++i) {
    VertexSet t = normalize(subtrees[i]);
    const std::string where = "/subtrees/" + std::to_string(i);
    if (t.empty() || t.front() < 0 || t.back() >= host.vertex_count()) throw InvalidInstance(where, "bad vertex set");
    if (induced_components(host.graph(), t).size() != 1) throw InvalidInstance(where, "subtree is not connected");
    trees.push_back(std::move(t));
  }
  std::set<std::vector<std::size_t>> seen;
  for (std::size_t s = 0; s < k; ++s) {
    auto subset = intersecting_p_subsets[s];
    std::sort(subset.begin(), subset.end());
    const std::string where = "/subsets/" + std::to_string(s);
    if (subset.size() != static_cast<std::size_t>(p) || std::adjacent_find(subset.begin(), subset.end()) != subset.end() ||
        subset.back() >= n) {
      throw InvalidInstance(where, "not a p-subset of subtree indices");
    }
    if (!seen.insert(subset).second) throw InvalidInstance(where, "repeated subset");
    bool shared = false;
    for (Vertex v : trees[subset[0]]) {
      shared = shared || std::all_of(subset.begin(), subset.end(), [&](std::size_t i) {
                 return std::binary_search(trees[i].begin(), trees[i].end(), v);
               });
    }
    if (!shared) throw InvalidInstance(where, "members share no vertex");
  }

  // Greedy: drop one subtree whose surviving-subset count c has c*n < k.
  std::vector<char> alive(n, 1);
  for (;;) {
    std::vector<std::size_t> count(n, 0);
    for (const auto& subset : intersecting_p_subsets) {
      if (std::all_of(subset.begin(), subset.end(), [&](std::size_t i) { return alive[i]; })) {
        for (std::size_t i : subset) ++count[i];
      }
    }
    std::size_t drop = n;
    for (std::size_t i = 0; i < n && drop == n; ++i) {
      if (alive[i] && count[i] * n < k) drop = i;
    }
    if (drop == n) break;
    alive[drop] = 0;
  }

  HeavyVertexResult out;
  for (std::size_t i = 0; i < n; ++i) {
    if (alive[i]) out.survivors.push_back(i);
  }
  if (out.survivors.empty()) throw std::logic_error("greedy removal emptied the family");

  const auto dist = host.distances_from(0);
  auto top = [&](std::size_t i) {
    return *std::min_element(trees[i].begin(), trees[i].end(), [&](Vertex a, Vertex b) { return dist[a] < dist[b]; });
  };
  out.owner = out.survivors.front();
  for (std::size_t i : out.survivors) {
    if (dist[top(i)] > dist[top(out.owner)]) out.owner = i;
  }
  out.vertex = top(out.owner);
  out.degree = static_cast<int>(std::count_if(trees.begin(), trees.end(), [&](const VertexSet& t) {
    return std::binary_search(t.begin(), t.end(), out.vertex);
  }));
  if (!heavy_vertex_bound_met(out.degree, p, k, n)) {
    throw std::logic_error("heavy vertex " + std::to_string(out.vertex) + " lies in only " + std::to_string(out.degree) +
                           " members");
  }
  return out;
}

std::vector<SharpnessRow> sharpness_probe(int k, const std::vector<int>& primes) {
  if (k < 2) throw BadParams("sharpness probe needs k >= 2");
  for (int q : primes) {
    if (!is_prime(q)) throw NotPrime(std::to_string(q) + " is not prime");
  }
  std::vector<SharpnessRow> rows;
  for (int q : primes) {
    const auto inst = projective_instance(ProjectiveParams{k, q});
    const auto lp = solve_fractional(inst.incidence);
    SharpnessRow row;
    row.field_order = q;
    row.d = inst.d;
    row.points = inst.incidence.ground_size;
    row.tau_star = lp.cover.value;
    row.duality_certified = lp.cover.value == lp.matching.value;
    row.expected = Rational(q) + Rational(1, inst.d);
    row.expected.canonicalize();
    row.exact_match = row.tau_star == row.expected;
    const Real root = boost::multiprecision::pow(Real(inst.d), Real(1) / (k - 1));
    const Real value = to_real(row.tau_star);
    row.ratio = static_cast<double>(value / root);
    row.lower_bound_ok = value >= root - 1;
    rows.push_back(std::move(row));
  }
  return rows;
}

json to_json(const SharpnessRow& row) {
  return {{"q", row.field_order},
          {"d", row.d},
          {"points", row.points},
          {"tau_star", to_string(row.tau_star)},
          {"expected", to_string(row.expected)},
          {"exact_match", row.exact_match},
          {"ratio", row.ratio},
          {"lower_bound_ok", row.lower_bound_ok},
          {"duality_certified", row.duality_certified}};
}

}  // namespace piercing
