#pragma once

#include "piercing/hypergraph.hpp"
#include "piercing/rational.hpp"

#include <cstddef>
#include <vector>

namespace piercing {

struct LpResult {
  Rational value;
  std::vector<Rational> primal;  // one per column
  std::vector<Rational> dual;    // one per row
  std::size_t pivots = 0;
};

// Solves  max c.y  s.t.  A y <= b,  y >= 0  with b >= 0, over exact
// rationals, using a dense tableau and Bland's smallest-index rule (no
// cycling on degenerate pivots). The slack basis is feasible, so there is
// no phase one. Duals are read from the objective row under the slack
// columns. Throws std::domain_error if the LP is unbounded, and
// std::invalid_argument on shape mismatch or negative b.
LpResult maximize_packing(const std::vector<std::vector<Rational>>& a, const std::vector<Rational>& b,
                          const std::vector<Rational>& c);

enum class Side { cover, matching };

struct FractionalSolution {
  Rational value;
  std::vector<Rational> weights;  // by point id (cover) or edge id (matching)
  Side side = Side::cover;
};

struct FractionalPair {
  FractionalSolution cover;
  FractionalSolution matching;
  std::size_t pivots = 0;
};

// tau* and nu* together. Both solutions are re-checked for feasibility and
// equal value before returning; a failed check throws std::logic_error.
// Edge multiplicity does not change the LP (copies split their entry's
// weight), so the program runs over distinct entries.
FractionalPair solve_fractional(const HypergraphInstance& instance);

FractionalSolution fractional_optimum(const HypergraphInstance& instance, Side side);

bool is_fractional_cover(const HypergraphInstance& instance, const std::vector<Rational>& weights);
bool is_fractional_matching(const HypergraphInstance& instance, const std::vector<Rational>& weights);

}  // namespace piercing
