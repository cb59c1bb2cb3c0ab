#pragma once

#include <span>
#include <utility>
#include <vector>

namespace piercing {

using Vertex = int;
using VertexSet = std::vector<Vertex>;  // sorted, no duplicates

// Simple undirected graph on vertices 0..n-1.
class Graph {
 public:
  Graph() = default;
  // Throws InvalidInstance on out-of-range ids, self-loops or repeated edges.
  Graph(int vertex_count, std::vector<std::pair<Vertex, Vertex>> edges);

  int vertex_count() const { return n_; }
  const std::vector<std::pair<Vertex, Vertex>>& edges() const { return edges_; }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
  bool has_edge(Vertex u, Vertex v) const;

 private:
  int n_ = 0;
  std::vector<std::pair<Vertex, Vertex>> edges_;
  std::vector<std::vector<Vertex>> adj_;
};

// Connected pieces of the subgraph induced on `vertices`, each sorted, ordered
// by smallest member. Input need not be sorted; duplicates are ignored.
std::vector<VertexSet> induced_components(const Graph& graph, std::span<const Vertex> vertices);

// Sorts and deduplicates.
VertexSet normalize(VertexSet vertices);

}  // namespace piercing
