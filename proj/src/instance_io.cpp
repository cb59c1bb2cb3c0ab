#include "piercing/instance_io.hpp"

#include "piercing/errors.hpp"

#include <fstream>
#include <sstream>

namespace piercing {

using nlohmann::json;

namespace {

template <class F>
auto with_prefix(const std::string& prefix, F&& build) {
  try {
    return build();
  } catch (const InvalidInstance& e) {
    throw InvalidInstance(prefix + e.where(), e.detail());
  }
}

const json& field(const json& obj, const std::string& path, const char* name) {
  if (!obj.is_object()) throw InvalidInstance(path, "expected an object");
  auto it = obj.find(name);
  if (it == obj.end()) throw InvalidInstance(path + "/" + name, "missing field");
  return *it;
}

int as_int(const json& v, const std::string& path) {
  if (!v.is_number_integer()) throw InvalidInstance(path, "expected an integer");
  return v.get<int>();
}

const json& as_array(const json& v, const std::string& path) {
  if (!v.is_array()) throw InvalidInstance(path, "expected an array");
  return v;
}

Rational as_rational(const json& v, const std::string& path) {
  if (v.is_number_integer()) return make_rational(v.get<long>());
  if (!v.is_string()) throw InvalidInstance(path, "expected a rational string");
  try {
    return parse_rational(v.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw InvalidInstance(path, e.what());
  }
}

std::vector<std::pair<Vertex, Vertex>> edge_list(const json& v, const std::string& path) {
  std::vector<std::pair<Vertex, Vertex>> out;
  const auto& arr = as_array(v, path);
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string where = path + "/" + std::to_string(i);
    const auto& pair = as_array(arr[i], where);
    if (pair.size() != 2) throw InvalidInstance(where, "edge must have two endpoints");
    out.emplace_back(as_int(pair[0], where + "/0"), as_int(pair[1], where + "/1"));
  }
  return out;
}

std::vector<VertexSet> vertex_sets(const json& v, const std::string& path) {
  std::vector<VertexSet> out;
  const auto& arr = as_array(v, path);
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string where = path + "/" + std::to_string(i);
    VertexSet set;
    const auto& members = as_array(arr[i], where);
    for (std::size_t j = 0; j < members.size(); ++j) set.push_back(as_int(members[j], where + "/" + std::to_string(j)));
    out.push_back(std::move(set));
  }
  return out;
}

Graph graph_from(const json& obj, const std::string& path) {
  const int n = as_int(field(obj, path, "n"), path + "/n");
  auto edges = edge_list(field(obj, path, "edges"), path + "/edges");
  return with_prefix(path, [&] { return Graph(n, std::move(edges)); });
}

HostTree tree_from(const json& obj, const std::string& path) {
  const int n = as_int(field(obj, path, "n"), path + "/n");
  auto edges = edge_list(field(obj, path, "edges"), path + "/edges");
  return with_prefix(path, [&] { return HostTree(n, std::move(edges)); });
}

DIntervalFamily parse_d_intervals(const json& doc) {
  const int d = as_int(field(doc, "", "d"), "/d");
  const auto& edges = as_array(field(doc, "", "edges"), "/edges");
  std::vector<DInterval> out;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string where = "/edges/" + std::to_string(i);
    const auto& parts = as_array(edges[i], where);
    std::vector<Interval> intervals;
    for (std::size_t j = 0; j < parts.size(); ++j) {
      const std::string pw = where + "/" + std::to_string(j);
      const auto& pair = as_array(parts[j], pw);
      if (pair.size() != 2) throw InvalidInstance(pw, "interval must be [lo, hi]");
      Rational lo = as_rational(pair[0], pw + "/0");
      Rational hi = as_rational(pair[1], pw + "/1");
      if (hi < lo) throw InvalidInstance(pw, "lo " + to_string(lo) + " exceeds hi " + to_string(hi));
      intervals.emplace_back(std::move(lo), std::move(hi));
    }
    try {
      out.emplace_back(std::move(intervals));
    } catch (const InvalidInstance& e) {
      throw InvalidInstance(where, e.detail());
    }
  }
  bool general_position = false;
  if (auto it = doc.find("general_position"); it != doc.end()) {
    if (!it->is_boolean()) throw InvalidInstance("/general_position", "expected a boolean");
    general_position = it->get<bool>();
  }
  return DIntervalFamily(d, std::move(out), general_position);
}

SubforestFamily parse_tree_subgraphs(const json& doc) {
  const int d = as_int(field(doc, "", "d"), "/d");
  HostTree host = tree_from(field(doc, "", "tree"), "/tree");
  std::vector<Subforest> edges;
  for (auto& set : vertex_sets(field(doc, "", "subgraphs"), "/subgraphs")) edges.push_back(Subforest{std::move(set)});
  return SubforestFamily(std::move(host), d, std::move(edges));
}

TwInstance parse_tw_graph(const json& doc) {
  TwInstance out;
  out.k = as_int(field(doc, "", "k"), "/k");
  if (out.k < 0) throw InvalidInstance("/k", "must be nonnegative");
  out.graph = graph_from(field(doc, "", "graph"), "/graph");
  const auto bags = vertex_sets(field(doc, "", "bags"), "/bags");
  if (bags.empty()) throw InvalidInstance("/bags", "need at least one bag");
  auto bag_edges = edge_list(field(doc, "", "bag_tree"), "/bag_tree");
  HostTree bag_tree = with_prefix("/bag_tree", [&] { return HostTree(static_cast<int>(bags.size()), std::move(bag_edges)); });
  out.decomposition = TreeDecomposition{std::move(bag_tree), bags, decomposition_width(bags)};
  const auto violations = validate_decomposition(out.graph, out.decomposition);
  if (!violations.empty()) throw InvalidInstance("/bags", violations.front());
  if (out.decomposition.width > out.k) {
    throw InvalidInstance("/bags", "decomposition width " + std::to_string(out.decomposition.width) + " exceeds k=" +
                                       std::to_string(out.k));
  }
  out.subgraphs = vertex_sets(field(doc, "", "subgraphs"), "/subgraphs");
  int widest = 1;
  for (std::size_t i = 0; i < out.subgraphs.size(); ++i) {
    auto& h = out.subgraphs[i];
    const std::string where = "/subgraphs/" + std::to_string(i);
    h = normalize(std::move(h));
    if (h.empty()) throw InvalidInstance(where, "subgraph is empty");
    if (h.front() < 0 || h.back() >= out.graph.vertex_count()) throw InvalidInstance(where, "vertex id out of range");
    widest = std::max(widest, static_cast<int>(induced_components(out.graph, h).size()));
  }
  out.d = widest;
  if (auto it = doc.find("d"); it != doc.end()) {
    out.d = as_int(*it, "/d");
    if (widest > out.d) throw InvalidInstance("/subgraphs", "a subgraph has more than d components");
  }
  return out;
}

}  // namespace

AnyFamily parse_instance(const json& doc) {
  const auto& type = field(doc, "", "type");
  if (!type.is_string()) throw InvalidInstance("/type", "expected a string");
  const auto name = type.get<std::string>();
  if (name == "d_intervals") return parse_d_intervals(doc);
  if (name == "tree_subgraphs") return parse_tree_subgraphs(doc);
  if (name == "tw_graph") return parse_tw_graph(doc);
  throw InvalidInstance("/type", "unknown instance type '" + name + "'");
}

AnyFamily parse_instance_text(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidInstance("document", e.what());
  }
  return parse_instance(doc);
}

AnyFamily load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInstance(path, "cannot open file");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_instance_text(buf.str());
  } catch (const InvalidInstance& e) {
    throw InvalidInstance(path + ":" + e.where(), e.detail());
  }
}

json to_json(const DIntervalFamily& family) {
  json edges = json::array();
  for (const auto& edge : family.edges()) {
    json parts = json::array();
    for (const auto& part : edge.parts()) parts.push_back({to_string(part.lo()), to_string(part.hi())});
    edges.push_back(std::move(parts));
  }
  json out = {{"type", "d_intervals"}, {"d", family.d()}, {"edges", std::move(edges)}};
  if (family.general_position()) out["general_position"] = true;
  return out;
}

namespace {

json edges_json(const Graph& g) {
  json out = json::array();
  for (const auto& [u, v] : g.edges()) out.push_back({u, v});
  return out;
}

}  // namespace

json to_json(const SubforestFamily& family) {
  json subgraphs = json::array();
  for (const auto& e : family.edges()) subgraphs.push_back(e.vertices);
  return {{"type", "tree_subgraphs"},
          {"d", family.d()},
          {"tree", {{"n", family.host().vertex_count()}, {"edges", edges_json(family.host().graph())}}},
          {"subgraphs", std::move(subgraphs)}};
}

json to_json(const TwInstance& instance) {
  return {{"type", "tw_graph"},
          {"k", instance.k},
          {"d", instance.d},
          {"graph", {{"n", instance.graph.vertex_count()}, {"edges", edges_json(instance.graph)}}},
          {"bags", instance.decomposition.bags},
          {"bag_tree", edges_json(instance.decomposition.tree.graph())},
          {"subgraphs", instance.subgraphs}};
}

json to_json(const AnyFamily& family) {
  return std::visit([](const auto& f) { return to_json(f); }, family);
}

HypergraphInstance incidence_of(const AnyFamily& family) {
  struct Visitor {
    HypergraphInstance operator()(const DIntervalFamily& f) const { return to_incidence(f); }
    HypergraphInstance operator()(const SubforestFamily& f) const { return to_incidence(f); }
    HypergraphInstance operator()(const TwInstance& t) const { return to_incidence(t.graph, t.d, t.subgraphs); }
  };
  return std::visit(Visitor{}, family);
}

int family_d(const AnyFamily& family) {
  struct Visitor {
    int operator()(const DIntervalFamily& f) const { return f.d(); }
    int operator()(const SubforestFamily& f) const { return f.d(); }
    int operator()(const TwInstance& t) const { return t.d; }
  };
  return std::visit(Visitor{}, family);
}

}  // namespace piercing
