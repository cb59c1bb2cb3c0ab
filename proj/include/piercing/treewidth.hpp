#pragma once

#include "piercing/graph.hpp"
#include "piercing/tree.hpp"

#include <span>
#include <string>
#include <vector>

namespace piercing {

// Tree of bags over a host graph. Bag i is vertex i of `tree`.
struct TreeDecomposition {
  HostTree tree;
  std::vector<VertexSet> bags;
  int width = 0;
};

// A graph with a decomposition of width <= k and a family of subgraphs
// (vertex sets) with at most d components each.
struct TwInstance {
  Graph graph;
  TreeDecomposition decomposition;
  std::vector<VertexSet> subgraphs;
  int k = 1;
  int d = 1;
};

// max bag size - 1 (-1 when every bag is empty).
int decomposition_width(const std::vector<VertexSet>& bags);

// Every broken rule, one message each: (i) uncovered vertex, (ii) vertex whose
// bags are not a connected subtree (with the offending bag path), (iii) graph
// edge in no bag, plus bag-count, id-range and width-field mismatches.
// Empty result means the decomposition is valid.
std::vector<std::string> validate_decomposition(const Graph& graph, const TreeDecomposition& decomposition);

struct LiftedFamily {
  SubforestFamily family;            // over the decomposition tree
  std::vector<std::size_t> origin;   // lifted edge i comes from source subgraph origin[i]
  std::vector<int> source_components;
  std::vector<int> lifted_components;
};

// h' = bags meeting h, for every source subgraph h. Throws
// InvalidDecomposition if the decomposition does not validate, and
// InvalidInstance if some subgraph is empty or has more than d components.
LiftedFamily lift_family(const Graph& graph, const TreeDecomposition& decomposition, int d,
                         const std::vector<VertexSet>& subgraphs);

// Union of the bags in `bag_cover`. Throws NotACover if `bag_cover` misses
// a lifted edge, or if the union misses a source subgraph.
VertexSet lift_cover(const TreeDecomposition& decomposition, const LiftedFamily& lifted,
                     const std::vector<VertexSet>& subgraphs, std::span<const int> bag_cover);

}  // namespace piercing
