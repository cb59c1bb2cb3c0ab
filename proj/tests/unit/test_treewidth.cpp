#include "piercing/errors.hpp"
#include "piercing/generators.hpp"
#include "piercing/solvers.hpp"
#include "piercing/treewidth.hpp"

#include <doctest.h>

#include <algorithm>

using namespace piercing;

namespace {

TreeDecomposition two_bags(VertexSet a, VertexSet b) {
  TreeDecomposition td{HostTree(2, {{0, 1}}), {std::move(a), std::move(b)}, 0};
  td.width = decomposition_width(td.bags);
  return td;
}

const Graph kPath(3, {{0, 1}, {1, 2}});
const Graph kCycle(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});

bool meets(const VertexSet& a, const VertexSet& b) {
  return std::any_of(a.begin(), a.end(), [&](Vertex v) { return std::binary_search(b.begin(), b.end(), v); });
}

}  // namespace

TEST_CASE("validate_decomposition examples") {
  const auto ok = two_bags({0, 1}, {1, 2});
  CHECK(validate_decomposition(kPath, ok).empty());
  CHECK(ok.width == 1);

  const auto missing = two_bags({0, 1}, {2});
  const auto v = validate_decomposition(kPath, missing);
  REQUIRE(v.size() == 1);
  CHECK(v[0].find("(iii)") != std::string::npos);
  CHECK(v[0].find("{1,2}") != std::string::npos);

  const auto cyc = two_bags({0, 1, 2}, {0, 2, 3});
  CHECK(validate_decomposition(kCycle, cyc).empty());
  CHECK(cyc.width == 2);
}

TEST_CASE("validate_decomposition reports each rule") {
  CHECK(validate_decomposition(kPath, two_bags({0, 1}, {1})).front().find("(i)") != std::string::npos);
  // vertex 0 in bags 0 and 2 but not in bag 1 on the path 0-1-2
  TreeDecomposition broken{HostTree(3, {{0, 1}, {1, 2}}), {{0, 1}, {1, 2}, {0, 2}}, 1};
  const auto v = validate_decomposition(kPath, broken);
  REQUIRE_FALSE(v.empty());
  CHECK(std::any_of(v.begin(), v.end(), [](const std::string& s) { return s.find("(ii)") != std::string::npos; }));
  auto wrong_width = two_bags({0, 1}, {1, 2});
  wrong_width.width = 3;
  CHECK_FALSE(validate_decomposition(kPath, wrong_width).empty());
}

TEST_CASE("lift_family examples") {
  const auto cyc = two_bags({0, 1, 2}, {0, 2, 3});
  const auto lifted = lift_family(kCycle, cyc, 2, {{1, 3}, {0, 1, 2}, {0, 1, 2, 3}});
  CHECK(lifted.source_components == std::vector<int>{2, 1, 1});
  CHECK(lifted.family.edges()[0].vertices == VertexSet{0, 1});
  CHECK(lifted.lifted_components[0] == 1);
  CHECK(std::binary_search(lifted.family.edges()[1].vertices.begin(), lifted.family.edges()[1].vertices.end(), 0));
  CHECK(lifted.family.edges()[2].vertices == VertexSet{0, 1});
  for (int c : lifted.lifted_components) CHECK(c == 1);

  CHECK_THROWS_AS(lift_family(kPath, two_bags({0, 1}, {2}), 1, {{0}}), InvalidDecomposition);
  CHECK_THROWS_AS(lift_family(kCycle, cyc, 1, {{1, 3}}), InvalidInstance);
}

TEST_CASE("lift_cover examples") {
  const auto cyc = two_bags({0, 1, 2}, {0, 2, 3});
  const std::vector<VertexSet> h{{1, 3}};
  const auto lifted = lift_family(kCycle, cyc, 2, h);
  const std::vector<int> one{1};
  const auto cover = lift_cover(cyc, lifted, h, one);
  CHECK(cover.size() <= 3);
  CHECK(meets(cover, h[0]));

  const std::vector<VertexSet> none;
  const auto empty_lift = lift_family(kCycle, cyc, 1, none);
  CHECK(lift_cover(cyc, empty_lift, none, std::vector<int>{}).empty());

  const std::vector<VertexSet> two{{1}, {3}};
  const auto lifted2 = lift_family(kCycle, cyc, 1, two);
  CHECK_THROWS_AS(lift_cover(cyc, lifted2, two, std::vector<int>{0}), NotACover);
}

TEST_CASE("lifting chain on generated instances") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const int k = 1 + static_cast<int>(seed % 2);
    const auto tw = random_tw_graph(GenConfig{seed, 7, 1 + static_cast<int>(seed % 2), 1, 12}, k);
    const auto lifted = lift_family(tw.graph, tw.decomposition, tw.d, tw.subgraphs);
    for (std::size_t i = 0; i < tw.subgraphs.size(); ++i) {
      CHECK(lifted.lifted_components[i] <= lifted.source_components[i]);
    }
    const auto source = to_incidence(tw.graph, tw.d, tw.subgraphs);
    const auto target = to_incidence(lifted.family);
    for (const PQParameters pq : {PQParameters{2, 2}, PQParameters{3, 2}, PQParameters{3, 3}}) {
      if (pq_check(source, pq).holds) CHECK(pq_check(target, pq).holds);
    }
    const auto tau = covering_number(target);
    const auto cover = lift_cover(tw.decomposition, lifted, tw.subgraphs, tau.witness);
    CHECK(cover.size() <= static_cast<std::size_t>((k + 1) * tau.optimum));
    for (const auto& h : tw.subgraphs) CHECK(meets(cover, h));
  }
}
