#pragma once

#include "piercing/bounds.hpp"
#include "piercing/hypergraph.hpp"
#include "piercing/instance_io.hpp"
#include "piercing/rational.hpp"
#include "piercing/solvers.hpp"
#include "piercing/tree.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace piercing {

// Absolute slack allowed when comparing an exact measurement with an
// irrational bound evaluated to 50 digits.
inline constexpr double kBoundTolerance = 1e-6;

// nu, tau and tau* of one instance, with witnesses and the duality check.
struct Measurements {
  int nu = 0;
  int tau = 0;
  Rational tau_star;
  Rational nu_star;
  bool duality_certified = false;
  int r = 0;
  std::vector<PointId> cover;
  std::vector<int> matching;
  std::vector<Rational> fractional_cover;
  std::vector<Rational> fractional_matching;
  long cover_nodes = 0;
  long matching_nodes = 0;
};

Measurements measure(const HypergraphInstance& instance);

struct VerifyParams {
  int p = 2;
  int q = 2;
  std::optional<int> k;  // TW_TAU; defaults to the instance's k
  std::uint64_t seed = 0;
};

struct BoundReport {
  BoundKind kind = BoundKind::ALON;
  int p = 2;
  int q = 2;
  int d = 1;
  int k = 0;
  std::uint64_t seed = 0;
  bool applicable = false;
  std::string inapplicable_reason;
  std::optional<std::vector<EdgeId>> counterexample;
  bool cited = false;
  Measurements measured;
  Real measured_value;  // tau or tau*, per kind
  Real bound_value;
  std::string bound_branch;
  bool satisfied = false;
  Real slack;  // bound_value - measured_value
  std::vector<std::string> cover_labels;
};

// Checks the kind's hypothesis first (family type, then pq_check with (p,p)
// or (p,q); d = 1 for GALLAI) and reports inapplicable, with the pq_check
// counterexample, instead of asserting a theorem whose hypothesis fails.
// Otherwise solves nu, tau, tau* exactly and compares against the bound.
// Pass `cached` to reuse measurements of the same family across kinds.
BoundReport verify_instance(const AnyFamily& family, BoundKind kind, const VerifyParams& params,
                            const Measurements* cached = nullptr);

nlohmann::json to_json(const Measurements& m, const HypergraphInstance& instance);
nlohmann::json to_json(const BoundReport& report);

struct HeavyVertexResult {
  Vertex vertex = 0;
  int degree = 0;                       // members of the whole multiset containing vertex
  std::size_t owner = 0;                // survivor whose top vertex was returned
  std::vector<std::size_t> survivors;   // dense subfamily after greedy removal
};

// Greedy dense subfamily plus deepest-root argument for a multiset of
// subtrees. `intersecting_p_subsets` lists k distinct p-subsets of subtree
// indices, each sharing a vertex. Subtrees whose count of surviving listed
// subsets is below k/n are removed one at a time (lowest index first,
// recounting after each removal). With the host rooted at 0, each survivor's
// top vertex is its member closest to the root; the top vertex of a
// survivor of maximal depth is returned.
//
// Postcondition (checked, std::logic_error on failure): the degree is at
// least ((p-1)! k/n)^(1/(p-1)) + 1 when k >= n, and at least 1 otherwise.
// Throws EmptySubfamily if k = 0, BadParams if p < 2, InvalidInstance if a
// subtree is disconnected or a listed subset is malformed.
HeavyVertexResult heavy_vertex(const HostTree& host, const std::vector<VertexSet>& subtrees, int p,
                               const std::vector<std::vector<std::size_t>>& intersecting_p_subsets);

// (deg-1)^(p-1) * n >= (p-1)! * k, in exact integers.
bool heavy_vertex_bound_met(int degree, int p, std::size_t k, std::size_t n);

struct SharpnessRow {
  int field_order = 0;
  int d = 0;
  int points = 0;
  Rational tau_star;
  Rational expected;  // q + 1/(1 + q + ... + q^(k-1))
  bool exact_match = false;
  double ratio = 0;   // tau* / d^(1/(k-1))
  bool lower_bound_ok = false;  // tau* >= d^(1/(k-1)) - 1
  bool duality_certified = false;
};

// Throws NotPrime / BadParams.
std::vector<SharpnessRow> sharpness_probe(int k, const std::vector<int>& primes);

nlohmann::json to_json(const SharpnessRow& row);

}  // namespace piercing
