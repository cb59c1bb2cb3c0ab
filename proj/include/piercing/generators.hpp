#pragma once

#include "piercing/hypergraph.hpp"
#include "piercing/interval.hpp"
#include "piercing/solvers.hpp"
#include "piercing/tree.hpp"
#include "piercing/treewidth.hpp"

#include <cstdint>
#include <vector>

namespace piercing {

struct GenConfig {
  std::uint64_t seed = 1;
  int n_edges = 8;
  int d = 2;
  int coord_denominator = 1;
  int host_size = 12;
};

void validate(const GenConfig& cfg);

// Edges with 1..d parts whose endpoints are distinct values i/coord_denominator;
// always in general position.
DIntervalFamily random_d_intervals(const GenConfig& cfg);

// floor((p-1)/(q-1)) anchors: the largest count A with A(q-1) < p, so any p
// edges put at least q on one anchor. Each edge has a part straddling its
// anchor; remaining parts are random. The result is re-checked with pq_check
// and PlantFailed is thrown if the check fails.
int planted_anchor_count(const PQParameters& params);
DIntervalFamily planted_pq_family(const GenConfig& cfg, const PQParameters& params);

struct ProjectiveParams {
  int dimension = 2;    // k
  int field_order = 2;  // prime
};

bool is_prime(long n);

struct ProjectiveInstance {
  HypergraphInstance incidence;     // points vs hyperplanes of PG(k, q)
  DIntervalFamily realization;      // point i at coordinate i; general_position off
  int d = 0;                        // 1 + q + ... + q^(k-1)
  std::vector<std::vector<int>> points;  // normalized coordinate vectors
};

// Throws NotPrime if the field order is not prime, BadParams if k < 2.
ProjectiveInstance projective_instance(const ProjectiveParams& params);

// Random attachment: vertex i joins a uniform earlier vertex.
HostTree random_tree(const GenConfig& cfg);

// Each edge is the union of 1..d random connected patches.
SubforestFamily random_subforests(const HostTree& host, const GenConfig& cfg);

// Subforest analogue of planted_pq_family: anchors are host vertices and
// each edge has a patch grown from its anchor.
SubforestFamily planted_pq_subforests(const HostTree& host, const GenConfig& cfg, const PQParameters& params);

// Bags of size <= k+1 where every bag after the first shares a nonempty part
// of a random parent bag and adds fresh vertices, so running intersection
// holds by construction. Graph edges are random pairs inside bags. Graph has
// cfg.host_size vertices; subgraphs are unions of <= d connected patches.
TwInstance random_tw_graph(const GenConfig& cfg, int k);

}  // namespace piercing
