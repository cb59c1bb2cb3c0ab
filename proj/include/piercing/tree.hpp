#pragma once

#include "piercing/graph.hpp"

#include <vector>

namespace piercing {

// A connected acyclic graph: exactly n-1 edges on 0..n-1.
class HostTree {
 public:
  HostTree() = default;
  HostTree(int vertex_count, std::vector<std::pair<Vertex, Vertex>> edges);

  int vertex_count() const { return graph_.vertex_count(); }
  const Graph& graph() const { return graph_; }

  // BFS distance from `root` to every vertex.
  std::vector<int> distances_from(Vertex root) const;
  // Vertices on the unique path from u to v, inclusive, in order.
  std::vector<Vertex> path(Vertex u, Vertex v) const;

 private:
  Graph graph_;
};

// A subgraph of a host tree given by its vertex set (induced semantics).
struct Subforest {
  VertexSet vertices;
};

class SubforestFamily {
 public:
  SubforestFamily() = default;
  // Validates every edge: nonempty, ids in range, at most d induced components.
  SubforestFamily(HostTree host, int d, std::vector<Subforest> edges);

  const HostTree& host() const { return host_; }
  int d() const { return d_; }
  const std::vector<Subforest>& edges() const { return edges_; }

 private:
  HostTree host_;
  int d_ = 1;
  std::vector<Subforest> edges_;
};

}  // namespace piercing
