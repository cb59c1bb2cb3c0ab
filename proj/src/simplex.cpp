#include "piercing/simplex.hpp"

#include <stdexcept>

namespace piercing {

LpResult maximize_packing(const std::vector<std::vector<Rational>>& a, const std::vector<Rational>& b,
                          const std::vector<Rational>& c) {
  const std::size_t m = a.size();
  const std::size_t n = c.size();
  if (b.size() != m) throw std::invalid_argument("row count mismatch");
  for (const auto& row : a) {
    if (row.size() != n) throw std::invalid_argument("column count mismatch");
  }
  for (const auto& bi : b) {
    if (bi < 0) throw std::invalid_argument("negative right-hand side");
  }

  // Row 0 is the objective (z - c.y = 0); rows 1..m the constraints.
  // Columns: 0..n-1 structural, n..n+m-1 slack, n+m the right-hand side.
  const std::size_t cols = n + m + 1;
  const std::size_t rhs = n + m;
  std::vector<std::vector<Rational>> t(m + 1, std::vector<Rational>(cols));
  for (std::size_t j = 0; j < n; ++j) t[0][j] = -c[j];
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) t[i + 1][j] = a[i][j];
    t[i + 1][n + i] = 1;
    t[i + 1][rhs] = b[i];
  }
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;

  LpResult out;
  std::vector<std::size_t> pivot_support;
  Rational best_ratio, ratio, factor;
  for (;;) {
    std::size_t enter = cols;
    for (std::size_t j = 0; j < n + m; ++j) {
      if (sgn(t[0][j]) < 0) {
        enter = j;
        break;
      }
    }
    if (enter == cols) break;

    std::size_t leave = m;
    for (std::size_t i = 0; i < m; ++i) {
      if (sgn(t[i + 1][enter]) <= 0) continue;
      ratio = t[i + 1][rhs] / t[i + 1][enter];
      if (leave == m || ratio < best_ratio || (ratio == best_ratio && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (leave == m) throw std::domain_error("LP is unbounded");

    auto& prow = t[leave + 1];
    const Rational inv = 1 / prow[enter];
    pivot_support.clear();
    for (std::size_t j = 0; j < cols; ++j) {
      if (sgn(prow[j]) != 0) {
        prow[j] *= inv;
        pivot_support.push_back(j);
      }
    }
    for (std::size_t r = 0; r <= m; ++r) {
      if (r == leave + 1 || sgn(t[r][enter]) == 0) continue;
      factor = t[r][enter];
      auto& row = t[r];
      for (std::size_t j : pivot_support) row[j] -= factor * prow[j];
    }
    basis[leave] = enter;
    ++out.pivots;
  }

  out.value = t[0][rhs];
  out.primal.assign(n, Rational(0));
  for (std::size_t i = 0; i < m; ++i) {
    if (basis[i] < n) out.primal[basis[i]] = t[i + 1][rhs];
  }
  out.dual.resize(m);
  for (std::size_t i = 0; i < m; ++i) out.dual[i] = t[0][n + i];
  return out;
}

bool is_fractional_cover(const HypergraphInstance& instance, const std::vector<Rational>& weights) {
  if (weights.size() != static_cast<std::size_t>(instance.ground_size)) return false;
  for (const auto& w : weights) {
    if (w < 0) return false;
  }
  for (const auto& e : instance.edges) {
    Rational sum = 0;
    for (PointId p : e) sum += weights[p];
    if (sum < 1) return false;
  }
  return true;
}

bool is_fractional_matching(const HypergraphInstance& instance, const std::vector<Rational>& weights) {
  if (weights.size() != instance.edges.size()) return false;
  std::vector<Rational> load(instance.ground_size);
  for (std::size_t e = 0; e < instance.edges.size(); ++e) {
    if (weights[e] < 0) return false;
    for (PointId p : instance.edges[e]) load[p] += weights[e];
  }
  for (const auto& l : load) {
    if (l > 1) return false;
  }
  return true;
}

FractionalPair solve_fractional(const HypergraphInstance& instance) {
  // Only points lying in some edge become constraint rows.
  std::vector<int> row_of(instance.ground_size, -1);
  std::vector<PointId> point_of_row;
  for (const auto& e : instance.edges) {
    for (PointId p : e) {
      if (row_of[p] < 0) {
        row_of[p] = static_cast<int>(point_of_row.size());
        point_of_row.push_back(p);
      }
    }
  }
  const std::size_t m = point_of_row.size();
  const std::size_t n = instance.edges.size();
  std::vector<std::vector<Rational>> a(m, std::vector<Rational>(n));
  for (std::size_t e = 0; e < n; ++e) {
    for (PointId p : instance.edges[e]) a[row_of[p]][e] = 1;
  }
  const auto lp = maximize_packing(a, std::vector<Rational>(m, Rational(1)), std::vector<Rational>(n, Rational(1)));

  FractionalPair out;
  out.pivots = lp.pivots;
  out.matching.side = Side::matching;
  out.matching.weights = lp.primal;
  out.cover.side = Side::cover;
  out.cover.weights.assign(instance.ground_size, Rational(0));
  for (std::size_t i = 0; i < m; ++i) out.cover.weights[point_of_row[i]] = lp.dual[i];
  for (const auto& w : out.matching.weights) out.matching.value += w;
  for (const auto& w : out.cover.weights) out.cover.value += w;

  if (!is_fractional_matching(instance, out.matching.weights)) throw std::logic_error("LP matching infeasible");
  if (!is_fractional_cover(instance, out.cover.weights)) throw std::logic_error("LP dual cover infeasible");
  if (out.matching.value != out.cover.value || out.matching.value != lp.value) {
    throw std::logic_error("LP duality certificate failed: " + to_string(out.matching.value) +
                           " != " + to_string(out.cover.value));
  }
  return out;
}

FractionalSolution fractional_optimum(const HypergraphInstance& instance, Side side) {
  auto pair = solve_fractional(instance);
  return side == Side::cover ? std::move(pair.cover) : std::move(pair.matching);
}

}  // namespace piercing
