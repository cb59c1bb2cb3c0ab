#include "piercing/campaign.hpp"
#include "piercing/errors.hpp"
#include "piercing/generators.hpp"
#include "piercing/harness.hpp"
#include "piercing/rng.hpp"

#include <doctest.h>

#include <cmath>

using namespace piercing;

TEST_CASE("verify_instance examples") {
  const AnyFamily fano = projective_instance({2, 2}).realization;
  const auto r = verify_instance(fano, BoundKind::DPP_STAR, {2, 2});
  CHECK(r.applicable);
  CHECK(r.d == 3);
  CHECK(r.measured.tau_star == Rational(7, 3));
  CHECK(r.bound_value == 7);
  CHECK(r.satisfied);

  std::vector<DInterval> apart;
  for (int i = 0; i < 3; ++i) apart.emplace_back(std::vector<Interval>{Interval(3 * i, 3 * i + 1)});
  const AnyFamily disjoint = DIntervalFamily(1, apart);
  const auto na = verify_instance(disjoint, BoundKind::DPP_STAR, {2, 2});
  CHECK_FALSE(na.applicable);
  REQUIRE(na.counterexample.has_value());
  CHECK(na.counterexample->size() == 2);

  const auto g = verify_instance(disjoint, BoundKind::GALLAI, {2, 2});
  CHECK(g.applicable);
  CHECK(g.satisfied);
  CHECK(g.measured.tau == 3);
  CHECK(g.measured.nu == 3);

  CHECK_FALSE(verify_instance(fano, BoundKind::GALLAI, {2, 2}).applicable);
  HostTree single(1, {});
  const AnyFamily tree = SubforestFamily(single, 1, {Subforest{{0}}});
  CHECK_FALSE(verify_instance(tree, BoundKind::DPP_STAR, {2, 2}).applicable);
  CHECK(verify_instance(tree, BoundKind::TREE_PP_STAR, {2, 2}).satisfied);
}

TEST_CASE("GALLAI holds on random d = 1 families") {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const AnyFamily f = random_d_intervals(GenConfig{seed, 10, 1, 1, 1});
    const auto r = verify_instance(f, BoundKind::GALLAI, {2, 2});
    CHECK(r.applicable);
    CHECK(r.measured.tau == r.measured.nu);
  }
}

TEST_CASE("verify_instance is deterministic") {
  const AnyFamily f = planted_pq_family(GenConfig{9, 10, 3, 2, 1}, {3, 2});
  const auto a = to_json(verify_instance(f, BoundKind::DPQ_TAU, {3, 2})).dump();
  const auto b = to_json(verify_instance(f, BoundKind::DPQ_TAU, {3, 2})).dump();
  CHECK(a == b);
}

TEST_CASE("heavy_vertex on a star") {
  const int n = 5;
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int i = 1; i <= n; ++i) edges.emplace_back(0, i);
  const HostTree star(n + 1, edges);
  std::vector<VertexSet> subtrees;
  for (int i = 1; i <= n; ++i) subtrees.push_back({0, i});
  std::vector<std::vector<std::size_t>> pairs;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) pairs.push_back({a, b});
  const auto r = heavy_vertex(star, subtrees, 2, pairs);
  CHECK(r.vertex == 0);
  CHECK(r.degree == n);

  CHECK_THROWS_AS(heavy_vertex(star, subtrees, 2, {}), EmptySubfamily);
  CHECK_THROWS_AS(heavy_vertex(star, {{1, 2}}, 2, {{0, 0}}), InvalidInstance);
}

TEST_CASE("heavy_vertex on nested paths") {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int i = 0; i + 1 < 10; ++i) edges.emplace_back(i, i + 1);
  const HostTree path(10, edges);
  std::vector<VertexSet> nested;
  for (int i = 0; i < 4; ++i) {
    VertexSet s;
    for (int v = i; v < 10 - i; ++v) s.push_back(v);
    nested.push_back(s);
  }
  std::vector<std::vector<std::size_t>> pairs;
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = a + 1; b < 4; ++b) pairs.push_back({a, b});
  const auto r = heavy_vertex(path, nested, 2, pairs);
  CHECK(r.vertex == 3);
  CHECK(r.degree == 4);
}

namespace {

std::vector<VertexSet> random_subtrees(Rng& rng, const HostTree& host, int count) {
  std::vector<VertexSet> out;
  for (int i = 0; i < count; ++i) {
    const int a = rng.range(0, host.vertex_count() - 1);
    const int b = rng.range(0, host.vertex_count() - 1);
    out.push_back(normalize(host.path(a, b)));
  }
  return out;
}

}  // namespace

TEST_CASE("heavy_vertex degree meets the degree bound on random subtrees") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    Rng rng(seed);
    const HostTree host = random_tree(GenConfig{seed, 1, 1, 1, rng.range(2, 15)});
    const auto trees = random_subtrees(rng, host, rng.range(2, 10));
    for (int p = 2; p <= 3; ++p) {
      std::vector<std::vector<std::size_t>> subsets;
      const std::size_t n = trees.size();
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
          for (std::size_t c = (p == 3 ? b + 1 : n); c <= n; ++c) {
            std::vector<std::size_t> s{a, b};
            if (p == 3) {
              if (c == n) continue;
              s.push_back(c);
            }
            bool shared = false;
            for (Vertex v = 0; v < host.vertex_count(); ++v) {
              bool all = true;
              for (auto i : s) all = all && std::binary_search(trees[i].begin(), trees[i].end(), v);
              shared = shared || all;
            }
            if (shared) subsets.push_back(s);
          }
      if (subsets.empty()) continue;
      const auto r = heavy_vertex(host, trees, p, subsets);
      int degree = 0;
      int best = 0;
      for (Vertex v = 0; v < host.vertex_count(); ++v) {
        int count = 0;
        for (const auto& t : trees) count += std::binary_search(t.begin(), t.end(), v);
        if (v == r.vertex) degree = count;
        best = std::max(best, count);
      }
      CHECK(r.degree == degree);
      CHECK(degree <= best);
      const double k = static_cast<double>(subsets.size());
      const double fact = p == 2 ? 1.0 : 2.0;
      if (k >= n) CHECK(degree + 1e-9 >= std::pow(fact * k / n, 1.0 / (p - 1)) + 1);
    }
  }
}

TEST_CASE("heavy_vertex_bound_met is exact") {
  CHECK(heavy_vertex_bound_met(5, 2, 10, 5));   // (5-1)*5 = 20 >= 10
  CHECK_FALSE(heavy_vertex_bound_met(2, 2, 10, 5));  // 5 < 10
  CHECK(heavy_vertex_bound_met(3, 3, 4, 2));    // 4*2 = 8 >= 2*4
  CHECK_FALSE(heavy_vertex_bound_met(3, 3, 5, 2));
  CHECK(heavy_vertex_bound_met(1, 2, 1, 2));
}

TEST_CASE("sharpness probe rows") {
  const auto k2 = sharpness_probe(2, {2, 5});
  CHECK(k2[0].d == 3);
  CHECK(k2[0].tau_star == Rational(7, 3));
  CHECK(k2[0].ratio == doctest::Approx(7.0 / 9.0));
  CHECK(k2[1].d == 6);
  CHECK(k2[1].tau_star == Rational(31, 6));
  CHECK(k2[1].exact_match);
  const auto k3 = sharpness_probe(3, {2});
  CHECK(k3[0].d == 7);
  CHECK(k3[0].tau_star == Rational(15, 7));
  CHECK(k3[0].ratio == doctest::Approx(15.0 / (7.0 * std::sqrt(7.0))));
  CHECK(k3[0].lower_bound_ok);
  CHECK_THROWS_AS(sharpness_probe(2, {4}), NotPrime);
}

TEST_CASE("campaigns") {
  const auto empty = run_campaign(parse_campaign_config(
      nlohmann::json::parse(R"({"generator":"planted_d_intervals","count":0,"kinds":["DPP_STAR"]})")));
  CHECK(empty.entries.empty());
  CHECK(empty.violations == 0);

  const auto cfg = parse_campaign_config(nlohmann::json::parse(
      R"({"generator":"planted_d_intervals","count":20,"seed":5,"n_edges":[3,8],"d":[1,3],
          "params":[{"p":2,"q":2}],"kinds":["DPP_STAR","DPP_TAU","ALON"],"threads":2})"));
  const auto a = run_campaign(cfg);
  CHECK(a.entries.size() == 20);
  CHECK(a.violations == 0);
  for (const auto& [kind, s] : a.summary) {
    CHECK(s.applicable == 20);
    CHECK(s.satisfied == 20);
  }
  auto ja = to_json(a);
  auto jb = to_json(run_campaign(cfg));
  ja.erase("runtime_ms");
  jb.erase("runtime_ms");
  CHECK(ja == jb);

  CHECK_THROWS_AS(parse_campaign_config(nlohmann::json::parse(R"({"generator":"nope","count":1})")), InvalidInstance);
}
