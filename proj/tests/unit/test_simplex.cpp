#include "piercing/generators.hpp"
#include "piercing/simplex.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace piercing;

TEST_CASE("textbook packing LP") {
  // max 3x + 2y  s.t. x + y <= 4, x + 3y <= 6, x <= 3  ->  x = 3, y = 1, value 11
  const std::vector<std::vector<Rational>> a{{1, 1}, {1, 3}, {1, 0}};
  const auto lp = maximize_packing(a, {4, 6, 3}, {3, 2});
  CHECK(lp.value == 11);
  CHECK(lp.primal == std::vector<Rational>{3, 1});
  // dual: 2*4 + 0*6 + 1*3 = 11
  CHECK(lp.dual == std::vector<Rational>{2, 0, 1});
}

TEST_CASE("degenerate LP terminates under the smallest-index rule") {
  // Beale's cycling example in packing form.
  const std::vector<std::vector<Rational>> a{
      {Rational(1, 4), -8, -1, 9}, {Rational(1, 2), -12, Rational(-1, 2), 3}, {0, 0, 1, 0}};
  const auto lp = maximize_packing(a, {0, 0, 1}, {Rational(3, 4), -20, Rational(1, 2), -6});
  CHECK(lp.value == Rational(5, 4));
}

TEST_CASE("unbounded and malformed programs") {
  const std::vector<std::vector<Rational>> a{{-1}};
  CHECK_THROWS_AS(maximize_packing(a, {1}, {1}), std::domain_error);
  CHECK_THROWS_AS(maximize_packing(a, {-1}, {1}), std::invalid_argument);
  CHECK_THROWS_AS(maximize_packing(a, {1, 1}, {1}), std::invalid_argument);
}

TEST_CASE("Fano fractional cover is 7/3 with weight 1/3 everywhere") {
  const auto fano = projective_instance({2, 2});
  const auto cover = fractional_optimum(fano.incidence, Side::cover);
  CHECK(cover.value == Rational(7, 3));
  // The optimum is unique: summing the 7 line constraints gives 3*sum >= 7.
  for (const auto& w : cover.weights) CHECK(w == Rational(1, 3));
  CHECK(fractional_optimum(fano.incidence, Side::matching).value == Rational(7, 3));
}

TEST_CASE("single edge and PG(3,2)") {
  CHECK(fractional_optimum(make_instance(3, {{0, 1, 2}}), Side::cover).value == 1);
  CHECK(fractional_optimum(projective_instance({3, 2}).incidence, Side::cover).value == Rational(15, 7));
}

TEST_CASE("strong duality on random instances") {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const auto h = testing::random_abstract(seed, 12, 10);
    const auto pair = solve_fractional(h);
    CHECK(pair.cover.value == pair.matching.value);
    CHECK(is_fractional_cover(h, pair.cover.weights));
    CHECK(is_fractional_matching(h, pair.matching.weights));
  }
}

TEST_CASE("feasibility checkers reject bad weights") {
  const auto h = make_instance(2, {{0}, {1}});
  CHECK_FALSE(is_fractional_cover(h, {1, Rational(1, 2)}));
  CHECK_FALSE(is_fractional_cover(h, {-1, 2}));
  CHECK_FALSE(is_fractional_matching(h, {2, 0}));
}
