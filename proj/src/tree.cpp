#include "piercing/tree.hpp"

#include "piercing/errors.hpp"

#include <algorithm>
#include <deque>
#include <string>

namespace piercing {

Graph::Graph(int vertex_count, std::vector<std::pair<Vertex, Vertex>> edges)
    : n_(vertex_count), edges_(std::move(edges)), adj_(vertex_count > 0 ? vertex_count : 0) {
  if (vertex_count < 0) throw InvalidInstance("n", "vertex count must be nonnegative");
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    auto [u, v] = edges_[i];
    const std::string where = "/edges/" + std::to_string(i);
    if (u < 0 || v < 0 || u >= n_ || v >= n_) throw InvalidInstance(where, "vertex id out of range");
    if (u == v) throw InvalidInstance(where, "self-loop");
    if (has_edge(u, v)) throw InvalidInstance(where, "repeated edge");
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& list : adj_) std::sort(list.begin(), list.end());
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  const auto& list = adj_[u];
  return std::find(list.begin(), list.end(), v) != list.end();
}

VertexSet normalize(VertexSet vertices) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  return vertices;
}

std::vector<VertexSet> induced_components(const Graph& graph, std::span<const Vertex> vertices) {
  const VertexSet members = normalize(VertexSet(vertices.begin(), vertices.end()));
  std::vector<char> inside(graph.vertex_count(), 0);
  for (Vertex v : members) inside[v] = 1;

  std::vector<VertexSet> pieces;
  std::vector<char> seen(graph.vertex_count(), 0);
  for (Vertex start : members) {
    if (seen[start]) continue;
    VertexSet piece;
    std::deque<Vertex> queue{start};
    seen[start] = 1;
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop_front();
      piece.push_back(v);
      for (Vertex w : graph.neighbors(v)) {
        if (inside[w] && !seen[w]) {
          seen[w] = 1;
          queue.push_back(w);
        }
      }
    }
    std::sort(piece.begin(), piece.end());
    pieces.push_back(std::move(piece));
  }
  return pieces;
}

HostTree::HostTree(int vertex_count, std::vector<std::pair<Vertex, Vertex>> edges) {
  if (vertex_count < 1) throw InvalidInstance("/n", "tree needs at least one vertex");
  if (static_cast<int>(edges.size()) != vertex_count - 1) {
    throw InvalidInstance("/edges", "tree on " + std::to_string(vertex_count) + " vertices needs " +
                                             std::to_string(vertex_count - 1) + " edges, got " +
                                             std::to_string(edges.size()));
  }
  graph_ = Graph(vertex_count, std::move(edges));
  std::vector<Vertex> all(vertex_count);
  for (int v = 0; v < vertex_count; ++v) all[v] = v;
  if (induced_components(graph_, all).size() != 1) throw InvalidInstance("/edges", "tree is not connected");
}

std::vector<int> HostTree::distances_from(Vertex root) const {
  std::vector<int> dist(vertex_count(), -1);
  std::deque<Vertex> queue{root};
  dist[root] = 0;
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    for (Vertex w : graph_.neighbors(v)) {
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::vector<Vertex> HostTree::path(Vertex u, Vertex v) const {
  std::vector<Vertex> parent(vertex_count(), -1);
  std::deque<Vertex> queue{u};
  parent[u] = u;
  while (!queue.empty()) {
    Vertex x = queue.front();
    queue.pop_front();
    if (x == v) break;
    for (Vertex w : graph_.neighbors(x)) {
      if (parent[w] < 0) {
        parent[w] = x;
        queue.push_back(w);
      }
    }
  }
  std::vector<Vertex> out{v};
  while (out.back() != u) out.push_back(parent[out.back()]);
  std::reverse(out.begin(), out.end());
  return out;
}

SubforestFamily::SubforestFamily(HostTree host, int d, std::vector<Subforest> edges)
    : host_(std::move(host)), d_(d), edges_(std::move(edges)) {
  if (d_ < 1) throw InvalidInstance("/d", "d must be positive");
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const std::string where = "/subgraphs/" + std::to_string(i);
    auto& vs = edges_[i].vertices;
    if (vs.empty()) throw InvalidInstance(where, "subgraph is empty");
    for (Vertex v : vs) {
      if (v < 0 || v >= host_.vertex_count()) throw InvalidInstance(where, "vertex id " + std::to_string(v) + " out of range");
    }
    vs = normalize(std::move(vs));
    const auto pieces = induced_components(host_.graph(), vs);
    if (static_cast<int>(pieces.size()) > d_) {
      throw InvalidInstance(where, "has " + std::to_string(pieces.size()) + " components, more than d=" + std::to_string(d_));
    }
  }
}

}  // namespace piercing
