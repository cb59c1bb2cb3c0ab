#include "piercing/errors.hpp"
#include "piercing/generators.hpp"
#include "piercing/interval.hpp"
#include "piercing/rng.hpp"

#include <doctest.h>

#include <algorithm>

using namespace piercing;

namespace {

Rational r(const char* s) { return parse_rational(s); }
Interval iv(const char* lo, const char* hi) { return Interval(r(lo), r(hi)); }
DInterval di(std::vector<Interval> parts) { return DInterval(std::move(parts)); }

}  // namespace

TEST_CASE("interval and d-interval invariants") {
  CHECK_THROWS_AS(iv("2", "1"), InvalidInstance);
  CHECK_NOTHROW(iv("5", "5"));
  CHECK_THROWS_AS(di({iv("0", "2"), iv("2", "3")}), InvalidInstance);  // closed parts touching
  const auto e = di({iv("5", "6"), iv("0", "2")});
  CHECK(e.parts().front().lo() == 0);  // sorted by lo
  CHECK_THROWS_AS(DIntervalFamily(1, {e}), InvalidInstance);
  CHECK_THROWS_AS(DIntervalFamily(2, {DInterval()}), InvalidInstance);
}

TEST_CASE("candidate_points") {
  DIntervalFamily one(1, {di({iv("0", "2")})});
  CHECK(candidate_points(one, CandidateMode::all_endpoints) == std::vector<Rational>{0, 2});

  DIntervalFamily two(2, {di({iv("0", "2"), iv("5", "6")}), di({iv("1", "3")})});
  CHECK(candidate_points(two, CandidateMode::right_endpoints) == std::vector<Rational>{2, 3, 6});

  const auto fano = projective_instance({2, 2});
  std::vector<Rational> ground;
  for (int i = 0; i < 7; ++i) ground.emplace_back(i);
  CHECK(candidate_points(fano.realization, CandidateMode::all_endpoints) == ground);
}

TEST_CASE("depth") {
  DIntervalFamily f(1, {di({iv("0", "2")}), di({iv("1", "3")})});
  CHECK(depth(f, r("3/2")) == 2);
  CHECK(depth(f, r("10")) == 0);
  const auto fano = projective_instance({2, 2});
  for (int x = 0; x < 7; ++x) CHECK(depth(fano.realization, Rational(x)) == 3);
}

TEST_CASE("common_intersection") {
  const std::vector<Interval> a{iv("0", "2"), iv("1", "3"), iv("3/2", "4")};
  CHECK(*common_intersection(a) == iv("3/2", "2"));
  const std::vector<Interval> b{iv("0", "1"), iv("2", "3")};
  CHECK_FALSE(common_intersection(b));
  const std::vector<Interval> c{iv("5", "5")};
  CHECK(*common_intersection(c) == iv("5", "5"));
}

TEST_CASE("endpoint_witnesses examples") {
  {
    const std::vector<Interval> a{iv("0", "2"), iv("1", "3"), iv("3/2", "4")};
    const auto w = endpoint_witnesses(a);
    CHECK(w[0].x == r("3/2"));
    CHECK(w[0].owner == 2);
    CHECK(w[0].others == std::vector<std::size_t>{0, 1});
    CHECK(w[1].x == 2);
    CHECK(w[1].owner == 0);
    CHECK(w[1].others == std::vector<std::size_t>{1, 2});
  }
  {
    const std::vector<Interval> a{iv("0", "10")};
    const auto w = endpoint_witnesses(a);
    CHECK(w[0].x == 0);
    CHECK(w[1].x == 10);
    CHECK(w[0].owner == 0);
    CHECK(w[1].others.empty());
  }
  {
    const std::vector<Interval> a{iv("0", "4"), iv("1", "3")};
    const auto w = endpoint_witnesses(a);
    CHECK(w[0].x == 1);
    CHECK(w[0].owner == 1);
    CHECK(w[0].others == std::vector<std::size_t>{0});
    CHECK(w[1].x == 3);
    CHECK(w[1].owner == 1);
  }
  const std::vector<Interval> apart{iv("0", "1"), iv("2", "3")};
  CHECK_THROWS_AS(endpoint_witnesses(apart), EmptyIntersection);
}

TEST_CASE("endpoint_witnesses property: points lie everywhere and are owner endpoints") {
  Rng rng(2024);
  for (int trial = 0; trial < 300; ++trial) {
    // Distinct integer endpoints around a shared point 0 keep general position.
    const int count = rng.range(1, 7);
    std::vector<int> lefts, rights;
    std::vector<int> pool(60);
    for (int i = 0; i < 60; ++i) pool[i] = i + 1;
    rng.shuffle(pool);
    std::vector<Interval> list;
    for (int i = 0; i < count; ++i) list.push_back(Interval(Rational(-pool[2 * i]), Rational(pool[2 * i + 1])));
    const auto w = endpoint_witnesses(list);
    for (const auto& pair : w) {
      for (const auto& interval : list) CHECK(interval.contains(pair.x));
      const auto& own = list[pair.owner];
      CHECK((pair.x == own.lo() || pair.x == own.hi()));
      CHECK(pair.others.size() == list.size() - 1);
    }
    if (count >= 2) CHECK((w[0].x != w[1].x || w[0].owner != w[1].owner));
  }
}

TEST_CASE("common_intersection is monotone") {
  Rng rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Interval> list;
    std::optional<Interval> prev;
    for (int i = 0; i < 6; ++i) {
      const int a = rng.range(0, 20), b = rng.range(0, 20);
      list.push_back(Interval(Rational(std::min(a, b)), Rational(std::max(a, b))));
      const auto cur = common_intersection(list);
      if (i == 0) CHECK(*cur == list[0]);
      if (prev && cur) CHECK((prev->lo() <= cur->lo() && cur->hi() <= prev->hi()));
      if (!prev && i > 0) CHECK_FALSE(cur);
      prev = cur;
    }
  }
}

TEST_CASE("subset_intersection_point") {
  DIntervalFamily f(1, {di({iv("0", "2")}), di({iv("1", "3")})});
  const std::vector<std::size_t> both{0, 1};
  const auto x = subset_intersection_point(f, both);
  REQUIRE(x);
  CHECK((1 <= *x && *x <= 2));

  DIntervalFamily g(1, {di({iv("0", "1")}), di({iv("2", "3")})});
  CHECK_FALSE(subset_intersection_point(g, both));

  // Fano: two lines meet in exactly one point, found by brute force here.
  const auto fano = projective_instance({2, 2});
  for (std::size_t a = 0; a < 7; ++a) {
    for (std::size_t b = a + 1; b < 7; ++b) {
      std::vector<int> common;
      for (int p = 0; p < 7; ++p) {
        const auto& ea = fano.incidence.edges[a];
        const auto& eb = fano.incidence.edges[b];
        if (std::count(ea.begin(), ea.end(), p) && std::count(eb.begin(), eb.end(), p)) common.push_back(p);
      }
      REQUIRE(common.size() == 1);
      const std::vector<std::size_t> pair{a, b};
      CHECK(*subset_intersection_point(fano.realization, pair) == common[0]);
    }
  }
}

TEST_CASE("candidate set realizes the maximum depth") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const auto f = random_d_intervals(GenConfig{seed, 7, 3, 3, 1});
    int best_candidate = 0;
    for (const auto& x : candidate_points(f, CandidateMode::all_endpoints)) best_candidate = std::max(best_candidate, depth(f, x));
    // refine: sample every multiple of 1/12 over the coordinate range
    int best_grid = 0;
    const auto all = candidate_points(f, CandidateMode::all_endpoints);
    for (Rational x = all.front() - 1; x <= all.back() + 1; x += Rational(1, 12)) best_grid = std::max(best_grid, depth(f, x));
    CHECK(best_candidate == best_grid);
    CHECK(best_candidate <= static_cast<int>(f.edges().size()));
  }
}

TEST_CASE("general position validation and repair") {
  // [0,1] and [1,2] share the endpoint 1.
  DIntervalFamily touching(1, {di({iv("0", "1")}), di({iv("1", "2")}), di({iv("3", "3")})});
  CHECK(general_position_violations(touching).size() == 1);
  CHECK_THROWS_AS(DIntervalFamily(1, touching.edges(), true), InvalidInstance);

  const auto fixed = repair_general_position(touching);
  CHECK(fixed.general_position());
  CHECK(general_position_violations(fixed).empty());
  // still intersecting where it was, still apart where it was
  const std::vector<std::size_t> first_two{0, 1};
  const std::vector<std::size_t> last_two{1, 2};
  CHECK(subset_intersection_point(fixed, first_two));
  CHECK_FALSE(subset_intersection_point(fixed, last_two));

  // projective realization is legitimately not in general position
  CHECK_FALSE(general_position_violations(projective_instance({2, 2}).realization).empty());
}

TEST_CASE("repair keeps the intersection pattern of every pair") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    Rng rng(seed);
    std::vector<DInterval> edges;
    for (int e = 0; e < 6; ++e) {
      const int a = rng.range(0, 6), b = rng.range(0, 6);
      edges.push_back(di({Interval(Rational(std::min(a, b)), Rational(std::max(a, b)))}));
    }
    DIntervalFamily f(1, edges);
    const auto g = repair_general_position(f);
    CHECK(general_position_violations(g).empty());
    for (std::size_t i = 0; i < 6; ++i) {
      for (std::size_t j = i + 1; j < 6; ++j) {
        const std::vector<std::size_t> pair{i, j};
        CHECK(subset_intersection_point(f, pair).has_value() == subset_intersection_point(g, pair).has_value());
      }
    }
  }
}
