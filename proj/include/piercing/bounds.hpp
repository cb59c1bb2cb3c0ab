#pragma once

#include <boost/multiprecision/cpp_dec_float.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace piercing {

// 50 significant digits; every bound below is certified far past 1e-9.
using Real = boost::multiprecision::cpp_dec_float_50;

enum class BoundKind {
  DPP_STAR,      // d-intervals, (p,p):  tau* < (pd)^(1/(p-1)) + 1
  DPP_TAU,       // d-intervals, (p,p):  tau  < p^(1/(p-1)) d^(p/(p-1)) + d
  DPQ_STAR,      // d-intervals, (p,q):  tau* <= max{C d^(1/(q-1)) + 1, 2p^2}
  DPQ_TAU,       // d-intervals, (p,q):  tau  <= max{C d^(q/(q-1)) + d, 2p^2 d}
  TREE_PP_STAR,  // d-trees, (p,p), as DPP_STAR
  TREE_PP_TAU,   // d-trees, (p,p), as DPP_TAU
  TREE_PQ_TAU,   // d-trees, (p,q), as DPQ_TAU
  TW_TAU,        // tree-width k graphs, (p,q): (k+1) * DPQ_TAU
  ALON,          // tau <= d tau*
  GALLAI,        // d = 1: tau = nu
  KAISER_P2,     // cited, not proven here: (p,2) gives tau <= (p-1)(d^2-d+1)
};
// C = 2^(1/(q-1)) (ep)^(q/(q-1)) / q

std::string_view to_string(BoundKind kind);
std::optional<BoundKind> parse_bound_kind(std::string_view name);

enum class Measure { tau, tau_star };
enum class Family { intervals, trees, tw_graph, intervals_or_trees };

struct BoundTraits {
  Measure measure;
  Family family;
  bool strict;        // "<" rather than "<="
  bool pp_property;   // hypothesis is (p,p) rather than (p,q)
  bool cited;         // result quoted from prior work, not proven in this toolkit's source
};

BoundTraits traits(BoundKind kind);

struct BoundValue {
  Real value;
  // For the max{...} kinds: "density" when the first term wins, "2p^2" for
  // the second. Empty otherwise.
  std::string branch;
};

// Closed form for the kind. For ALON the result is the factor d; for GALLAI
// it is p-1 (the (p,2) consequence). Throws BadParams unless p >= q >= 2,
// d >= 1 and k >= 0.
BoundValue evaluate_bound(BoundKind kind, int p, int q, int d, int k = 0);

}  // namespace piercing
