#pragma once

#include "piercing/hypergraph.hpp"
#include "piercing/rational.hpp"

#include <optional>
#include <span>
#include <vector>

namespace piercing {

struct SolveResult {
  int optimum = 0;
  std::vector<int> witness;  // point ids (cover) or edge ids (matching)
  long node_count = 0;
};

struct CoverOptions {
  // Known lower bound on tau (e.g. ceil of a tau* already computed). When
  // absent, the root LP is solved.
  std::optional<int> lower_bound;
};

// Minimum cover by branch and bound: greedy initial incumbent, LP root bound,
// disjoint-packing node bound, branching on the uncovered edge with fewest
// candidate points (lowest id on ties). If cover_candidate is set, only
// flagged points are branched on.
SolveResult covering_number(const HypergraphInstance& instance, const CoverOptions& options = {});

// Maximum set of pairwise disjoint distinct edges. Branches on the point of
// highest remaining degree (lowest id on ties): take one of its edges, or
// none. Bound: a greedy cover of the remaining edges.
SolveResult matching_number(const HypergraphInstance& instance);

struct PQParameters {
  int p = 2;
  int q = 2;
};

// Throws BadParams unless p >= q >= 2.
void validate(const PQParameters& params);

struct PQVerdict {
  bool holds = true;
  bool vacuous = false;  // fewer than p distinct edges
  std::optional<std::vector<EdgeId>> counterexample;
  int max_depth = 0;  // r, with multiplicity
  long subsets_checked = 0;
};

// Among every p distinct edges, some q share a point.
PQVerdict pq_check(const HypergraphInstance& instance, const PQParameters& params);

struct DepthResult {
  int r = 0;
  PointId point = 0;
};

// Point covered by the most edges, counted with multiplicity.
DepthResult max_depth(const HypergraphInstance& instance);

enum class Quantity { nu, tau };

// Exhaustive enumeration without pruning, for tests. Throws TooLarge unless
// edges <= 14 and ground_size <= 20.
int naive_oracle(const HypergraphInstance& instance, Quantity quantity);

bool is_cover(const HypergraphInstance& instance, std::span<const PointId> points);
bool is_matching(const HypergraphInstance& instance, std::span<const EdgeId> edges);

}  // namespace piercing
