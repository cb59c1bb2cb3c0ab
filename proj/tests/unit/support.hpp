#pragma once

// Test-only helpers: random abstract instances and brute-force references
// that never call into the solvers under test.

#include "piercing/hypergraph.hpp"
#include "piercing/interval.hpp"
#include "piercing/rng.hpp"

#include <algorithm>
#include <vector>

namespace piercing::testing {

inline HypergraphInstance random_abstract(std::uint64_t seed, int max_ground, int max_edges) {
  Rng rng(seed);
  const int ground = rng.range(1, max_ground);
  const int edges = rng.range(1, max_edges);
  std::vector<std::vector<PointId>> out;
  for (int e = 0; e < edges; ++e) {
    std::vector<PointId> members;
    const int size = rng.range(1, std::min(ground, 4));
    while (static_cast<int>(members.size()) < size) {
      const auto p = static_cast<PointId>(rng.below(ground));
      if (std::find(members.begin(), members.end(), p) == members.end()) members.push_back(p);
    }
    out.push_back(members);
  }
  return make_instance(ground, out);
}

// Do the given d-intervals share a point? Tries every choice of one part
// per edge and compares max lo with min hi.
inline bool pierceable(const std::vector<const DInterval*>& edges) {
  std::vector<std::size_t> choice(edges.size(), 0);
  for (;;) {
    Rational lo = edges[0]->parts()[choice[0]].lo();
    Rational hi = edges[0]->parts()[choice[0]].hi();
    for (std::size_t i = 1; i < edges.size(); ++i) {
      const auto& part = edges[i]->parts()[choice[i]];
      if (part.lo() > lo) lo = part.lo();
      if (part.hi() < hi) hi = part.hi();
    }
    if (lo <= hi) return true;
    std::size_t i = 0;
    while (i < edges.size() && ++choice[i] == edges[i]->parts().size()) choice[i++] = 0;
    if (i == edges.size()) return false;
  }
}

// tau of a d-interval family straight from geometry: the fewest groups,
// each sharing a point, that partition the edges (subset DP).
inline int geometric_tau(const DIntervalFamily& family) {
  const std::size_t n = family.edges().size();
  const std::size_t full = (1u << n) - 1;
  std::vector<char> ok(full + 1, 0);
  for (std::size_t s = 1; s <= full; ++s) {
    std::vector<const DInterval*> group;
    for (std::size_t i = 0; i < n; ++i) {
      if (s >> i & 1u) group.push_back(&family.edges()[i]);
    }
    ok[s] = pierceable(group);
  }
  std::vector<int> best(full + 1, 1 << 20);
  best[0] = 0;
  for (std::size_t s = 1; s <= full; ++s) {
    const std::size_t low = s & (~s + 1);
    for (std::size_t sub = s; sub; sub = (sub - 1) & s) {
      if ((sub & low) && ok[sub]) best[s] = std::min(best[s], best[s ^ sub] + 1);
    }
  }
  return best[full];
}

// nu from geometry: largest set of pairwise non-overlapping d-intervals.
inline int geometric_nu(const DIntervalFamily& family) {
  const std::size_t n = family.edges().size();
  int best = 0;
  for (std::size_t s = 0; s < (1u << n); ++s) {
    bool disjoint = true;
    for (std::size_t i = 0; i < n && disjoint; ++i) {
      for (std::size_t j = i + 1; j < n && disjoint; ++j) {
        if ((s >> i & 1u) && (s >> j & 1u)) disjoint = !pierceable({&family.edges()[i], &family.edges()[j]});
      }
    }
    if (disjoint) best = std::max(best, std::popcount(s));
  }
  return best;
}

}  // namespace piercing::testing
