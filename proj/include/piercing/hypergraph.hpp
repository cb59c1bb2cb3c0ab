#pragma once

#include "piercing/graph.hpp"
#include "piercing/interval.hpp"
#include "piercing/tree.hpp"

#include <string>
#include <vector>

namespace piercing {

enum class Provenance { interval, tree, abstract };

std::string to_string(Provenance p);

using PointId = int;
using EdgeId = std::size_t;

// Finite incidence form consumed by every solver. Each entry of `edges` is a
// distinct family member; `multiplicity[i]` counts identical copies of entry i
// (the proof-internal a_i).
struct HypergraphInstance {
  int ground_size = 0;
  std::vector<std::vector<PointId>> edges;  // each sorted, nonempty
  std::vector<int> multiplicity;
  Provenance provenance = Provenance::abstract;
  int d = 0;  // component bound of the source family; 0 for abstract input
  // Optional human-readable names of ground points (coordinates, vertex ids).
  std::vector<std::string> point_labels;
  // Optional: points sufficient for an optimal cover (right endpoints).
  std::vector<bool> cover_candidate;

  std::size_t edge_count() const { return edges.size(); }
  std::string label(PointId p) const {
    return point_labels.empty() ? std::to_string(p) : point_labels[p];
  }
};

// Builds an instance with unit multiplicities; throws InvalidInstance on
// empty edges or out-of-range ids. Edges are sorted and deduplicated.
HypergraphInstance make_instance(int ground_size, std::vector<std::vector<PointId>> edges,
                                 Provenance provenance = Provenance::abstract, int d = 0);

void validate(const HypergraphInstance& instance);

// Ground = all endpoint candidates; each edge maps to the candidates it
// contains. Right endpoints are flagged in cover_candidate.
HypergraphInstance to_incidence(const DIntervalFamily& family);

// Ground = host vertices; edges = vertex sets.
HypergraphInstance to_incidence(const SubforestFamily& family);

// Subgraphs of an arbitrary graph, given by vertex sets. Provenance is
// abstract: the tree-only ratio tau <= d*tau* is not claimed for such graphs.
HypergraphInstance to_incidence(const Graph& graph, int d, const std::vector<VertexSet>& subgraphs);

}  // namespace piercing
