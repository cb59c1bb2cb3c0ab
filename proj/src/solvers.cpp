#include "piercing/solvers.hpp"

#include "piercing/errors.hpp"
#include "piercing/simplex.hpp"

#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <cstdint>
#include <numeric>

namespace piercing {

namespace {

using Bits = boost::dynamic_bitset<>;

struct Incidence {
  std::vector<Bits> points_of_edge;  // over ground
  std::vector<Bits> edges_at_point;  // over edges

  explicit Incidence(const HypergraphInstance& h)
      : points_of_edge(h.edges.size(), Bits(h.ground_size)),
        edges_at_point(h.ground_size, Bits(h.edges.size())) {
    for (std::size_t e = 0; e < h.edges.size(); ++e) {
      for (PointId p : h.edges[e]) {
        points_of_edge[e].set(p);
        edges_at_point[p].set(e);
      }
    }
  }
};

// Points chosen greedily (most remaining edges first, lowest id on ties)
// until `remaining` is empty.
std::vector<PointId> greedy_cover(const Incidence& inc, Bits remaining, const std::vector<PointId>& allowed) {
  std::vector<PointId> out;
  while (remaining.any()) {
    PointId best = -1;
    std::size_t best_hits = 0;
    for (PointId p : allowed) {
      const std::size_t hits = (inc.edges_at_point[p] & remaining).count();
      if (hits > best_hits) {
        best_hits = hits;
        best = p;
      }
    }
    if (best < 0) break;
    out.push_back(best);
    remaining -= inc.edges_at_point[best];
  }
  return out;
}

class CoverSearch {
 public:
  CoverSearch(const HypergraphInstance& h, int root_bound) : h_(h), inc_(h), root_bound_(root_bound) {
    for (PointId p = 0; p < h.ground_size; ++p) {
      if (h.cover_candidate.empty() || h.cover_candidate[p]) allowed_.push_back(p);
    }
    candidates_of_edge_.resize(h.edges.size());
    for (std::size_t e = 0; e < h.edges.size(); ++e) {
      for (PointId p : h.edges[e]) {
        if (h.cover_candidate.empty() || h.cover_candidate[p]) candidates_of_edge_[e].push_back(p);
      }
    }
  }

  SolveResult run() {
    Bits all(h_.edges.size());
    all.set();
    best_ = greedy_cover(inc_, all, allowed_);
    std::vector<PointId> chosen;
    search(all, chosen);
    SolveResult r;
    r.optimum = static_cast<int>(best_.size());
    r.witness = best_;
    std::sort(r.witness.begin(), r.witness.end());
    r.node_count = nodes_;
    return r;
  }

 private:
  // Size of a greedy family of pairwise disjoint uncovered edges.
  int packing_bound(const Bits& uncovered) const {
    std::vector<std::size_t> order;
    for (auto e = uncovered.find_first(); e != Bits::npos; e = uncovered.find_next(e)) order.push_back(e);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return candidates_of_edge_[a].size() < candidates_of_edge_[b].size();
    });
    Bits used(h_.ground_size);
    int count = 0;
    for (std::size_t e : order) {
      if (!inc_.points_of_edge[e].intersects(used)) {
        used |= inc_.points_of_edge[e];
        ++count;
      }
    }
    return count;
  }

  void search(const Bits& uncovered, std::vector<PointId>& chosen) {
    ++nodes_;
    if (static_cast<int>(best_.size()) <= root_bound_) return;
    if (uncovered.none()) {
      if (chosen.size() < best_.size()) best_ = chosen;
      return;
    }
    if (static_cast<int>(chosen.size()) + packing_bound(uncovered) >= static_cast<int>(best_.size())) return;

    std::size_t branch = Bits::npos;
    for (auto e = uncovered.find_first(); e != Bits::npos; e = uncovered.find_next(e)) {
      if (branch == Bits::npos || candidates_of_edge_[e].size() < candidates_of_edge_[branch].size()) branch = e;
    }
    std::vector<std::pair<std::size_t, PointId>> options;
    for (PointId p : candidates_of_edge_[branch]) {
      options.emplace_back((inc_.edges_at_point[p] & uncovered).count(), p);
    }
    std::stable_sort(options.begin(), options.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
    for (const auto& [hits, p] : options) {
      chosen.push_back(p);
      search(uncovered - inc_.edges_at_point[p], chosen);
      chosen.pop_back();
    }
  }

  const HypergraphInstance& h_;
  Incidence inc_;
  int root_bound_;
  std::vector<PointId> allowed_;
  std::vector<std::vector<PointId>> candidates_of_edge_;
  std::vector<PointId> best_;
  long nodes_ = 0;
};

class MatchingSearch {
 public:
  explicit MatchingSearch(const HypergraphInstance& h) : h_(h), inc_(h) {
    conflicts_.assign(h.edges.size(), Bits(h.edges.size()));
    for (std::size_t e = 0; e < h.edges.size(); ++e) {
      for (PointId p : h.edges[e]) conflicts_[e] |= inc_.edges_at_point[p];
    }
    all_points_.resize(h.ground_size);
    std::iota(all_points_.begin(), all_points_.end(), 0);
  }

  SolveResult run() {
    Bits all(h_.edges.size());
    all.set();
    std::vector<int> chosen;
    search(all, chosen);
    SolveResult r;
    r.optimum = static_cast<int>(best_.size());
    r.witness = best_;
    std::sort(r.witness.begin(), r.witness.end());
    r.node_count = nodes_;
    return r;
  }

 private:
  void search(const Bits& remaining, std::vector<int>& chosen) {
    ++nodes_;
    if (chosen.size() > best_.size()) best_ = chosen;
    if (remaining.none()) return;
    const auto upper = chosen.size() + greedy_cover(inc_, remaining, all_points_).size();
    if (upper <= best_.size()) return;

    PointId pivot = -1;
    std::size_t pivot_degree = 0;
    for (PointId p = 0; p < h_.ground_size; ++p) {
      const std::size_t deg = (inc_.edges_at_point[p] & remaining).count();
      if (deg > pivot_degree) {
        pivot_degree = deg;
        pivot = p;
      }
    }
    const Bits through = inc_.edges_at_point[pivot] & remaining;
    for (auto e = through.find_first(); e != Bits::npos; e = through.find_next(e)) {
      chosen.push_back(static_cast<int>(e));
      search(remaining - conflicts_[e], chosen);
      chosen.pop_back();
    }
    search(remaining - through, chosen);
  }

  const HypergraphInstance& h_;
  Incidence inc_;
  std::vector<Bits> conflicts_;
  std::vector<PointId> all_points_;
  std::vector<int> best_;
  long nodes_ = 0;
};

}  // namespace

SolveResult covering_number(const HypergraphInstance& instance, const CoverOptions& options) {
  validate(instance);
  if (instance.edges.empty()) return {};
  int root = 0;
  if (options.lower_bound) {
    root = *options.lower_bound;
  } else {
    root = static_cast<int>(ceil_to_long(solve_fractional(instance).cover.value));
  }
  return CoverSearch(instance, root).run();
}

SolveResult matching_number(const HypergraphInstance& instance) {
  validate(instance);
  if (instance.edges.empty()) return {};
  return MatchingSearch(instance).run();
}

void validate(const PQParameters& params) {
  if (params.q < 2 || params.p < params.q) {
    throw BadParams("need p >= q >= 2, got p=" + std::to_string(params.p) + " q=" + std::to_string(params.q));
  }
}

DepthResult max_depth(const HypergraphInstance& instance) {
  std::vector<int> load(instance.ground_size, 0);
  for (std::size_t e = 0; e < instance.edges.size(); ++e) {
    for (PointId p : instance.edges[e]) load[p] += instance.multiplicity[e];
  }
  DepthResult out;
  for (PointId p = 0; p < instance.ground_size; ++p) {
    if (load[p] > out.r) {
      out.r = load[p];
      out.point = p;
    }
  }
  return out;
}

PQVerdict pq_check(const HypergraphInstance& instance, const PQParameters& params) {
  validate(params);
  validate(instance);
  PQVerdict verdict;
  verdict.max_depth = max_depth(instance).r;
  const std::size_t n = instance.edges.size();
  const std::size_t p = static_cast<std::size_t>(params.p);
  const std::size_t q = static_cast<std::size_t>(params.q);
  if (n < p) {
    verdict.vacuous = true;
    return verdict;
  }

  const Incidence inc(instance);
  std::vector<Bits> cores;  // q-sets already known to share a point
  constexpr std::size_t kMaxCores = 32;

  std::vector<std::size_t> pick(p);
  std::iota(pick.begin(), pick.end(), 0);
  Bits subset(n);
  for (;;) {
    ++verdict.subsets_checked;
    subset.reset();
    for (std::size_t e : pick) subset.set(e);

    bool ok = std::any_of(cores.begin(), cores.end(), [&](const Bits& c) { return c.is_subset_of(subset); });
    if (!ok) {
      for (PointId v = 0; v < instance.ground_size && !ok; ++v) {
        Bits shared = inc.edges_at_point[v] & subset;
        if (shared.count() >= q) {
          ok = true;
          Bits core(n);
          std::size_t taken = 0;
          for (auto e = shared.find_first(); e != Bits::npos && taken < q; e = shared.find_next(e), ++taken) {
            core.set(e);
          }
          if (cores.size() == kMaxCores) cores.erase(cores.begin());
          cores.push_back(std::move(core));
        }
      }
    }
    if (!ok) {
      verdict.holds = false;
      verdict.counterexample = std::vector<EdgeId>(pick.begin(), pick.end());
      return verdict;
    }

    // next combination in lexicographic order
    std::size_t i = p;
    while (i > 0 && pick[i - 1] == n - p + (i - 1)) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < p; ++j) pick[j] = pick[j - 1] + 1;
  }
  return verdict;
}

int naive_oracle(const HypergraphInstance& instance, Quantity quantity) {
  if (instance.edges.size() > 14 || instance.ground_size > 20) {
    throw TooLarge("naive oracle needs <= 14 edges and <= 20 points");
  }
  std::vector<std::uint32_t> masks;
  for (const auto& e : instance.edges) {
    std::uint32_t m = 0;
    for (PointId p : e) m |= 1u << p;
    masks.push_back(m);
  }
  int best = 0;
  if (quantity == Quantity::tau) {
    best = instance.ground_size + 1;
    const std::uint32_t limit = 1u << instance.ground_size;
    for (std::uint32_t s = 0; s < limit; ++s) {
      bool covers = true;
      for (auto m : masks) covers = covers && (m & s) != 0;
      if (covers) best = std::min(best, std::popcount(s));
    }
  } else {
    const std::uint32_t limit = 1u << masks.size();
    for (std::uint32_t s = 0; s < limit; ++s) {
      std::uint32_t used = 0;
      bool disjoint = true;
      for (std::size_t e = 0; e < masks.size(); ++e) {
        if (!(s >> e & 1u)) continue;
        disjoint = disjoint && (used & masks[e]) == 0;
        used |= masks[e];
      }
      if (disjoint) best = std::max(best, std::popcount(s));
    }
  }
  return best;
}

bool is_cover(const HypergraphInstance& instance, std::span<const PointId> points) {
  for (const auto& e : instance.edges) {
    const bool hit = std::any_of(points.begin(), points.end(),
                                 [&](PointId p) { return std::binary_search(e.begin(), e.end(), p); });
    if (!hit) return false;
  }
  return true;
}

bool is_matching(const HypergraphInstance& instance, std::span<const EdgeId> edges) {
  std::vector<char> used(instance.ground_size, 0);
  std::vector<char> picked(instance.edges.size(), 0);
  for (EdgeId e : edges) {
    if (e >= instance.edges.size() || picked[e]) return false;
    picked[e] = 1;
    for (PointId p : instance.edges[e]) {
      if (used[p]) return false;
      used[p] = 1;
    }
  }
  return true;
}

}  // namespace piercing
