#include "piercing/bounds.hpp"

#include "piercing/errors.hpp"

#include <array>

namespace piercing {

namespace {

constexpr std::array<std::pair<BoundKind, std::string_view>, 11> kNames{{
    {BoundKind::DPP_STAR, "DPP_STAR"},
    {BoundKind::DPP_TAU, "DPP_TAU"},
    {BoundKind::DPQ_STAR, "DPQ_STAR"},
    {BoundKind::DPQ_TAU, "DPQ_TAU"},
    {BoundKind::TREE_PP_STAR, "TREE_PP_STAR"},
    {BoundKind::TREE_PP_TAU, "TREE_PP_TAU"},
    {BoundKind::TREE_PQ_TAU, "TREE_PQ_TAU"},
    {BoundKind::TW_TAU, "TW_TAU"},
    {BoundKind::ALON, "ALON"},
    {BoundKind::GALLAI, "GALLAI"},
    {BoundKind::KAISER_P2, "KAISER_P2"},
}};

Real density_constant(int p, int q) {
  const Real e = boost::multiprecision::exp(Real(1));
  const Real qm1 = q - 1;
  return boost::multiprecision::pow(Real(2), Real(1) / qm1) * boost::multiprecision::pow(e * p, Real(q) / qm1) / q;
}

BoundValue pp_star(int p, int d) {
  return {boost::multiprecision::pow(Real(p) * d, Real(1) / (p - 1)) + 1, ""};
}

BoundValue pp_tau(int p, int d) {
  const Real pm1 = p - 1;
  return {boost::multiprecision::pow(Real(p), 1 / pm1) * boost::multiprecision::pow(Real(d), p / pm1) + d, ""};
}

BoundValue pq_max(const Real& density, const Real& quadratic) {
  if (density >= quadratic) return {density, "density"};
  return {quadratic, "2p^2"};
}

BoundValue pq_star(int p, int q, int d) {
  const Real density = density_constant(p, q) * boost::multiprecision::pow(Real(d), Real(1) / (q - 1)) + 1;
  return pq_max(density, Real(2) * p * p);
}

BoundValue pq_tau(int p, int q, int d) {
  const Real density = density_constant(p, q) * boost::multiprecision::pow(Real(d), Real(q) / (q - 1)) + d;
  return pq_max(density, Real(2) * p * p * d);
}

}  // namespace

std::string_view to_string(BoundKind kind) {
  for (const auto& [k, name] : kNames) {
    if (k == kind) return name;
  }
  return "?";
}

std::optional<BoundKind> parse_bound_kind(std::string_view name) {
  for (const auto& [k, n] : kNames) {
    if (n == name) return k;
  }
  return std::nullopt;
}

BoundTraits traits(BoundKind kind) {
  switch (kind) {
    case BoundKind::DPP_STAR: return {Measure::tau_star, Family::intervals, true, true, false};
    case BoundKind::DPP_TAU: return {Measure::tau, Family::intervals, true, true, false};
    case BoundKind::DPQ_STAR: return {Measure::tau_star, Family::intervals, false, false, false};
    case BoundKind::DPQ_TAU: return {Measure::tau, Family::intervals, false, false, false};
    case BoundKind::TREE_PP_STAR: return {Measure::tau_star, Family::trees, true, true, false};
    case BoundKind::TREE_PP_TAU: return {Measure::tau, Family::trees, true, true, false};
    case BoundKind::TREE_PQ_TAU: return {Measure::tau, Family::trees, false, false, false};
    case BoundKind::TW_TAU: return {Measure::tau, Family::tw_graph, false, false, false};
    case BoundKind::ALON: return {Measure::tau, Family::intervals_or_trees, false, false, true};
    case BoundKind::GALLAI: return {Measure::tau, Family::intervals, false, false, true};
    case BoundKind::KAISER_P2: return {Measure::tau, Family::intervals, false, false, true};
  }
  return {Measure::tau, Family::intervals, false, false, false};
}

BoundValue evaluate_bound(BoundKind kind, int p, int q, int d, int k) {
  if (q < 2 || p < q || d < 1 || k < 0) {
    throw BadParams("bound needs p >= q >= 2, d >= 1, k >= 0 (got p=" + std::to_string(p) + " q=" + std::to_string(q) +
                    " d=" + std::to_string(d) + " k=" + std::to_string(k) + ")");
  }
  switch (kind) {
    case BoundKind::DPP_STAR:
    case BoundKind::TREE_PP_STAR: return pp_star(p, d);
    case BoundKind::DPP_TAU:
    case BoundKind::TREE_PP_TAU: return pp_tau(p, d);
    case BoundKind::DPQ_STAR: return pq_star(p, q, d);
    case BoundKind::DPQ_TAU:
    case BoundKind::TREE_PQ_TAU: return pq_tau(p, q, d);
    case BoundKind::TW_TAU: {
      auto inner = pq_tau(p, q, d);
      inner.value *= (k + 1);
      return inner;
    }
    case BoundKind::ALON: return {Real(d), ""};
    case BoundKind::GALLAI: return {Real(p - 1), ""};
    case BoundKind::KAISER_P2: return {Real(p - 1) * (Real(d) * d - d + 1), ""};
  }
  throw BadParams("unknown bound kind");
}

}  // namespace piercing
