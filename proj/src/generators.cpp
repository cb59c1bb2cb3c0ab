#include "piercing/generators.hpp"

#include "piercing/errors.hpp"
#include "piercing/rng.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>

namespace piercing {

namespace {

Interval grid_interval(int lo_slot, int hi_slot, int den) {
  return Interval(make_rational(lo_slot, den), make_rational(hi_slot, den));
}

// Pairs consecutive sorted slots into disjoint parts.
DInterval edge_from_slots(std::vector<int> slots, int den) {
  std::sort(slots.begin(), slots.end());
  std::vector<Interval> parts;
  for (std::size_t i = 0; i + 1 < slots.size(); i += 2) parts.push_back(grid_interval(slots[i], slots[i + 1], den));
  return DInterval(std::move(parts));
}

// `count` distinct unused slots from [lo, hi), marked used.
std::vector<int> take_slots(Rng& rng, std::vector<char>& used, int lo, int hi, int count) {
  std::vector<int> free;
  for (int s = lo; s < hi; ++s) {
    if (!used[s]) free.push_back(s);
  }
  if (static_cast<int>(free.size()) < count) throw PlantFailed("slot grid exhausted");
  rng.shuffle(free);
  free.resize(count);
  for (int s : free) used[s] = 1;
  return free;
}

VertexSet grow_patch(const Graph& graph, Vertex start, int size, Rng& rng) {
  VertexSet patch{start};
  std::vector<char> inside(graph.vertex_count(), 0);
  inside[start] = 1;
  while (static_cast<int>(patch.size()) < size) {
    std::vector<Vertex> frontier;
    for (Vertex v : patch) {
      for (Vertex w : graph.neighbors(v)) {
        if (!inside[w]) frontier.push_back(w);
      }
    }
    if (frontier.empty()) break;
    std::sort(frontier.begin(), frontier.end());
    frontier.erase(std::unique(frontier.begin(), frontier.end()), frontier.end());
    const Vertex next = frontier[rng.below(frontier.size())];
    inside[next] = 1;
    patch.push_back(next);
  }
  return normalize(std::move(patch));
}

VertexSet random_member(const Graph& graph, int d, Rng& rng, std::optional<Vertex> anchor) {
  const int n = graph.vertex_count();
  const int patches = rng.range(1, d);
  VertexSet member;
  for (int i = 0; i < patches; ++i) {
    const Vertex start = (i == 0 && anchor) ? *anchor : static_cast<Vertex>(rng.below(n));
    const auto patch = grow_patch(graph, start, rng.range(1, std::max(1, n / 3)), rng);
    member.insert(member.end(), patch.begin(), patch.end());
  }
  return normalize(std::move(member));
}

}  // namespace

void validate(const GenConfig& cfg) {
  if (cfg.n_edges < 1 || cfg.d < 1 || cfg.coord_denominator < 1 || cfg.host_size < 1) {
    throw BadParams("generator config fields must be positive");
  }
}

DIntervalFamily random_d_intervals(const GenConfig& cfg) {
  validate(cfg);
  Rng rng(cfg.seed);
  std::vector<int> part_counts(cfg.n_edges);
  for (auto& c : part_counts) c = rng.range(1, cfg.d);
  const int endpoints = 2 * std::accumulate(part_counts.begin(), part_counts.end(), 0);
  const int grid = std::max(4 * endpoints, 8);

  std::vector<int> pool(grid);
  std::iota(pool.begin(), pool.end(), 0);
  rng.shuffle(pool);
  std::vector<DInterval> edges;
  std::size_t next = 0;
  for (int c : part_counts) {
    std::vector<int> slots(pool.begin() + next, pool.begin() + next + 2 * c);
    next += 2 * c;
    edges.push_back(edge_from_slots(std::move(slots), cfg.coord_denominator));
  }
  return DIntervalFamily(cfg.d, std::move(edges), true);
}

int planted_anchor_count(const PQParameters& params) {
  validate(params);
  return (params.p - 1) / (params.q - 1);
}

DIntervalFamily planted_pq_family(const GenConfig& cfg, const PQParameters& params) {
  validate(cfg);
  const int anchors = planted_anchor_count(params);
  Rng rng(cfg.seed);
  std::vector<int> part_counts(cfg.n_edges);
  for (auto& c : part_counts) c = rng.range(1, cfg.d);
  const int endpoints = 2 * std::accumulate(part_counts.begin(), part_counts.end(), 0);
  const int grid = std::max(8 * endpoints, 16);

  // Anchor j sits at slot_j + 1/2, never on a grid value.
  std::vector<int> anchor_slot(anchors);
  for (int j = 0; j < anchors; ++j) anchor_slot[j] = (j + 1) * grid / (anchors + 1);

  std::vector<char> used(grid, 0);
  std::vector<DInterval> edges;
  for (int c : part_counts) {
    const int anchor = static_cast<int>(rng.below(anchors));
    const int straddle = static_cast<int>(rng.below(c));
    auto slots = take_slots(rng, used, 0, anchor_slot[anchor] + 1, 2 * straddle + 1);
    const auto right = take_slots(rng, used, anchor_slot[anchor] + 1, grid, 2 * (c - straddle) - 1);
    slots.insert(slots.end(), right.begin(), right.end());
    edges.push_back(edge_from_slots(std::move(slots), cfg.coord_denominator));
  }
  DIntervalFamily family(cfg.d, std::move(edges), true);
  if (!pq_check(to_incidence(family), params).holds) {
    throw PlantFailed("planted d-interval family fails the (p,q) check");
  }
  return family;
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long f = 2; f * f <= n; ++f) {
    if (n % f == 0) return false;
  }
  return true;
}

ProjectiveInstance projective_instance(const ProjectiveParams& params) {
  const int q = params.field_order;
  const int k = params.dimension;
  if (!is_prime(q)) throw NotPrime(std::to_string(q) + " is not prime");
  if (k < 2) throw BadParams("projective dimension must be at least 2");

  ProjectiveInstance out;
  std::vector<int> v(k + 1, 0);
  for (;;) {
    const auto lead = std::find_if(v.begin(), v.end(), [](int x) { return x != 0; });
    if (lead != v.end() && *lead == 1) out.points.push_back(v);
    int i = k;
    while (i >= 0 && v[i] == q - 1) v[i--] = 0;
    if (i < 0) break;
    ++v[i];
  }

  const int n = static_cast<int>(out.points.size());
  std::vector<std::vector<PointId>> incidence;
  std::vector<DInterval> realization;
  for (const auto& h : out.points) {
    std::vector<PointId> edge;
    std::vector<Interval> parts;
    for (int i = 0; i < n; ++i) {
      long dot = 0;
      for (int c = 0; c <= k; ++c) dot += static_cast<long>(h[c]) * out.points[i][c];
      if (dot % q == 0) {
        edge.push_back(i);
        parts.emplace_back(make_rational(i), make_rational(i));
      }
    }
    incidence.push_back(std::move(edge));
    realization.emplace_back(std::move(parts));
  }
  out.d = 0;
  for (int i = 0, power = 1; i < k; ++i, power *= q) out.d += power;
  out.incidence = make_instance(n, std::move(incidence), Provenance::interval, out.d);
  for (int i = 0; i < n; ++i) out.incidence.point_labels.push_back(std::to_string(i));
  out.realization = DIntervalFamily(out.d, std::move(realization), false);
  return out;
}

HostTree random_tree(const GenConfig& cfg) {
  validate(cfg);
  Rng rng(cfg.seed);
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int v = 1; v < cfg.host_size; ++v) edges.emplace_back(static_cast<Vertex>(rng.below(v)), v);
  return HostTree(cfg.host_size, std::move(edges));
}

SubforestFamily random_subforests(const HostTree& host, const GenConfig& cfg) {
  validate(cfg);
  Rng rng(cfg.seed ^ 0x9e3779b97f4a7c15ULL);
  std::vector<Subforest> edges;
  for (int i = 0; i < cfg.n_edges; ++i) edges.push_back(Subforest{random_member(host.graph(), cfg.d, rng, std::nullopt)});
  return SubforestFamily(host, cfg.d, std::move(edges));
}

SubforestFamily planted_pq_subforests(const HostTree& host, const GenConfig& cfg, const PQParameters& params) {
  validate(cfg);
  const int anchors = planted_anchor_count(params);
  Rng rng(cfg.seed ^ 0x51ed270b27a3c9d1ULL);
  std::vector<Vertex> anchor_vertex(anchors);
  for (auto& a : anchor_vertex) a = static_cast<Vertex>(rng.below(host.vertex_count()));
  std::vector<Subforest> edges;
  for (int i = 0; i < cfg.n_edges; ++i) {
    const Vertex anchor = anchor_vertex[rng.below(anchors)];
    edges.push_back(Subforest{random_member(host.graph(), cfg.d, rng, anchor)});
  }
  SubforestFamily family(host, cfg.d, std::move(edges));
  if (!pq_check(to_incidence(family), params).holds) {
    throw PlantFailed("planted subforest family fails the (p,q) check");
  }
  return family;
}

TwInstance random_tw_graph(const GenConfig& cfg, int k) {
  validate(cfg);
  if (k < 1) throw BadParams("tree-width generator needs k >= 1");
  Rng rng(cfg.seed);
  const int n = cfg.host_size;

  std::vector<VertexSet> bags;
  std::vector<std::pair<Vertex, Vertex>> bag_edges;
  int next_vertex = 0;
  {
    VertexSet first;
    const int size = std::min(n, rng.range(1, k + 1));
    while (static_cast<int>(first.size()) < size) first.push_back(next_vertex++);
    bags.push_back(first);
  }
  while (next_vertex < n) {
    const int parent = static_cast<int>(rng.below(bags.size()));
    VertexSet shared = bags[parent];
    rng.shuffle(shared);
    shared.resize(rng.range(1, std::min<int>(shared.size(), k)));
    const int fresh = std::min(n - next_vertex, rng.range(1, k + 1 - static_cast<int>(shared.size())));
    for (int i = 0; i < fresh; ++i) shared.push_back(next_vertex++);
    bag_edges.emplace_back(parent, static_cast<Vertex>(bags.size()));
    bags.push_back(normalize(std::move(shared)));
  }

  std::set<std::pair<Vertex, Vertex>> pairs;
  for (const auto& bag : bags) {
    for (std::size_t i = 0; i < bag.size(); ++i) {
      for (std::size_t j = i + 1; j < bag.size(); ++j) {
        if (rng.coin()) pairs.emplace(bag[i], bag[j]);
      }
    }
  }

  TwInstance out;
  out.k = k;
  out.d = cfg.d;
  out.graph = Graph(n, std::vector<std::pair<Vertex, Vertex>>(pairs.begin(), pairs.end()));
  const int bag_count = static_cast<int>(bags.size());
  out.decomposition = TreeDecomposition{HostTree(bag_count, std::move(bag_edges)), bags, decomposition_width(bags)};
  for (int i = 0; i < cfg.n_edges; ++i) out.subgraphs.push_back(random_member(out.graph, cfg.d, rng, std::nullopt));
  return out;
}

}  // namespace piercing
