#include "piercing/treewidth.hpp"

#include "piercing/errors.hpp"

#include <algorithm>

namespace piercing {

namespace {

std::string join(const std::vector<int>& xs) {
  std::string s = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
  return s + "}";
}

bool contains(const VertexSet& set, Vertex v) { return std::binary_search(set.begin(), set.end(), v); }

}  // namespace

int decomposition_width(const std::vector<VertexSet>& bags) {
  std::size_t widest = 0;
  for (const auto& b : bags) widest = std::max(widest, b.size());
  return static_cast<int>(widest) - 1;
}

std::vector<std::string> validate_decomposition(const Graph& graph, const TreeDecomposition& decomposition) {
  std::vector<std::string> out;
  const auto& bags = decomposition.bags;
  if (static_cast<int>(bags.size()) != decomposition.tree.vertex_count()) {
    out.push_back("bag count " + std::to_string(bags.size()) + " differs from decomposition tree size " +
                  std::to_string(decomposition.tree.vertex_count()));
    return out;
  }
  std::vector<VertexSet> sorted_bags;
  for (std::size_t i = 0; i < bags.size(); ++i) {
    sorted_bags.push_back(normalize(bags[i]));
    for (Vertex v : bags[i]) {
      if (v < 0 || v >= graph.vertex_count()) {
        out.push_back("bag " + std::to_string(i) + " has out-of-range vertex " + std::to_string(v));
      }
    }
  }
  if (!out.empty()) return out;

  for (Vertex v = 0; v < graph.vertex_count(); ++v) {
    std::vector<int> holding;
    for (std::size_t i = 0; i < sorted_bags.size(); ++i) {
      if (contains(sorted_bags[i], v)) holding.push_back(static_cast<int>(i));
    }
    if (holding.empty()) {
      out.push_back("(i) vertex " + std::to_string(v) + " is in no bag");
      continue;
    }
    const auto pieces = induced_components(decomposition.tree.graph(), holding);
    if (pieces.size() > 1) {
      const auto path = decomposition.tree.path(pieces[0].front(), pieces[1].front());
      std::vector<int> missing;
      for (int b : path) {
        if (!contains(sorted_bags[b], v)) missing.push_back(b);
      }
      out.push_back("(ii) vertex " + std::to_string(v) + " is in bags " + std::to_string(pieces[0].front()) + " and " +
                    std::to_string(pieces[1].front()) + " but not in bags " + join(missing) + " on the path " +
                    join(path));
    }
  }
  for (const auto& [u, v] : graph.edges()) {
    const bool inside = std::any_of(sorted_bags.begin(), sorted_bags.end(),
                                    [&](const VertexSet& b) { return contains(b, u) && contains(b, v); });
    if (!inside) out.push_back("(iii) edge {" + std::to_string(u) + "," + std::to_string(v) + "} is in no bag");
  }
  const int width = decomposition_width(sorted_bags);
  if (width != decomposition.width) {
    out.push_back("width field " + std::to_string(decomposition.width) + " but largest bag gives " +
                  std::to_string(width));
  }
  return out;
}

LiftedFamily lift_family(const Graph& graph, const TreeDecomposition& decomposition, int d,
                         const std::vector<VertexSet>& subgraphs) {
  const auto violations = validate_decomposition(graph, decomposition);
  if (!violations.empty()) throw InvalidDecomposition(violations.front());

  LiftedFamily out;
  std::vector<Subforest> lifted;
  for (std::size_t i = 0; i < subgraphs.size(); ++i) {
    const VertexSet h = normalize(subgraphs[i]);
    const std::string where = "/subgraphs/" + std::to_string(i);
    if (h.empty()) throw InvalidInstance(where, "subgraph is empty");
    if (h.front() < 0 || h.back() >= graph.vertex_count()) throw InvalidInstance(where, "vertex id out of range");
    const int components = static_cast<int>(induced_components(graph, h).size());
    if (components > d) {
      throw InvalidInstance(where, "has " + std::to_string(components) + " components, more than d=" + std::to_string(d));
    }
    VertexSet bags_meeting;
    for (std::size_t b = 0; b < decomposition.bags.size(); ++b) {
      const auto& bag = decomposition.bags[b];
      const bool meets = std::any_of(bag.begin(), bag.end(), [&](Vertex v) { return contains(h, v); });
      if (meets) bags_meeting.push_back(static_cast<int>(b));
    }
    out.origin.push_back(i);
    out.source_components.push_back(components);
    out.lifted_components.push_back(
        static_cast<int>(induced_components(decomposition.tree.graph(), bags_meeting).size()));
    lifted.push_back(Subforest{std::move(bags_meeting)});
  }
  out.family = SubforestFamily(decomposition.tree, d, std::move(lifted));
  return out;
}

VertexSet lift_cover(const TreeDecomposition& decomposition, const LiftedFamily& lifted,
                     const std::vector<VertexSet>& subgraphs, std::span<const int> bag_cover) {
  for (std::size_t i = 0; i < lifted.family.edges().size(); ++i) {
    const auto& bags = lifted.family.edges()[i].vertices;
    const bool hit = std::any_of(bag_cover.begin(), bag_cover.end(), [&](int b) { return contains(bags, b); });
    if (!hit) throw NotACover("bag set misses lifted edge " + std::to_string(i));
  }
  VertexSet out;
  for (int b : bag_cover) {
    const auto& bag = decomposition.bags.at(b);
    out.insert(out.end(), bag.begin(), bag.end());
  }
  out = normalize(std::move(out));
  for (std::size_t i = 0; i < subgraphs.size(); ++i) {
    const VertexSet h = normalize(subgraphs[i]);
    const bool hit = std::any_of(out.begin(), out.end(), [&](Vertex v) { return contains(h, v); });
    if (!hit) throw NotACover("union of bags misses source subgraph " + std::to_string(i));
  }
  return out;
}

}  // namespace piercing
