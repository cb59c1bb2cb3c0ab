#include "piercing/hypergraph.hpp"

#include "piercing/errors.hpp"

#include <algorithm>

namespace piercing {

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::interval: return "interval";
    case Provenance::tree: return "tree";
    case Provenance::abstract: return "abstract";
  }
  return "abstract";
}

void validate(const HypergraphInstance& instance) {
  if (instance.ground_size < 1) throw InvalidInstance("ground_size", "must be positive");
  if (instance.multiplicity.size() != instance.edges.size()) {
    throw InvalidInstance("multiplicity", "length differs from edge count");
  }
  for (std::size_t i = 0; i < instance.edges.size(); ++i) {
    const auto& e = instance.edges[i];
    const std::string where = "/edges/" + std::to_string(i);
    if (e.empty()) throw InvalidInstance(where, "edge is empty");
    if (!std::is_sorted(e.begin(), e.end()) || std::adjacent_find(e.begin(), e.end()) != e.end()) {
      throw InvalidInstance(where, "point ids must be sorted and distinct");
    }
    if (e.front() < 0 || e.back() >= instance.ground_size) throw InvalidInstance(where, "point id out of range");
    if (instance.multiplicity[i] < 1) throw InvalidInstance("/multiplicity/" + std::to_string(i), "must be positive");
  }
}

HypergraphInstance make_instance(int ground_size, std::vector<std::vector<PointId>> edges, Provenance provenance,
                                 int d) {
  HypergraphInstance h;
  h.ground_size = ground_size;
  for (auto& e : edges) h.edges.push_back(normalize(std::move(e)));
  h.multiplicity.assign(h.edges.size(), 1);
  h.provenance = provenance;
  h.d = d;
  validate(h);
  return h;
}

HypergraphInstance to_incidence(const DIntervalFamily& family) {
  const auto ground = candidate_points(family, CandidateMode::all_endpoints);
  const auto rights = candidate_points(family, CandidateMode::right_endpoints);

  HypergraphInstance h;
  h.ground_size = static_cast<int>(ground.size());
  h.provenance = Provenance::interval;
  h.d = family.d();
  for (const auto& x : ground) {
    h.point_labels.push_back(to_string(x));
    h.cover_candidate.push_back(std::binary_search(rights.begin(), rights.end(), x));
  }
  for (const auto& edge : family.edges()) {
    std::vector<PointId> members;
    for (const auto& part : edge.parts()) {
      auto first = std::lower_bound(ground.begin(), ground.end(), part.lo());
      auto last = std::upper_bound(ground.begin(), ground.end(), part.hi());
      for (auto it = first; it != last; ++it) members.push_back(static_cast<PointId>(it - ground.begin()));
    }
    h.edges.push_back(std::move(members));
  }
  h.multiplicity.assign(h.edges.size(), 1);
  if (h.ground_size == 0) {  // empty family still gets a ground
    h.ground_size = 1;
    h.point_labels.push_back("0");
    h.cover_candidate.push_back(false);
  }
  validate(h);
  return h;
}

HypergraphInstance to_incidence(const SubforestFamily& family) {
  std::vector<std::vector<PointId>> edges;
  for (const auto& e : family.edges()) edges.push_back(e.vertices);
  return make_instance(family.host().vertex_count(), std::move(edges), Provenance::tree, family.d());
}

HypergraphInstance to_incidence(const Graph& graph, int d, const std::vector<VertexSet>& subgraphs) {
  return make_instance(std::max(1, graph.vertex_count()), subgraphs, Provenance::abstract, d);
}

}  // namespace piercing
