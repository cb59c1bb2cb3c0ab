#pragma once

#include "piercing/rational.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace piercing {

// Closed interval [lo, hi]; lo == hi is a point.
class Interval {
 public:
  Interval(Rational lo, Rational hi);

  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  bool contains(const Rational& x) const { return lo_ <= x && x <= hi_; }
  bool operator==(const Interval&) const = default;

 private:
  Rational lo_;
  Rational hi_;
};

// Union of disjoint closed intervals, parts sorted by lo.
class DInterval {
 public:
  DInterval() = default;
  // Sorts parts; throws InvalidInstance if two parts touch or overlap.
  explicit DInterval(std::vector<Interval> parts);

  const std::vector<Interval>& parts() const { return parts_; }
  bool contains(const Rational& x) const;

 private:
  std::vector<Interval> parts_;
};

class DIntervalFamily {
 public:
  DIntervalFamily() = default;
  // Throws InvalidInstance if some edge has more than d parts or is empty, or
  // if general_position is requested and violated.
  DIntervalFamily(int d, std::vector<DInterval> edges, bool general_position = false);

  int d() const { return d_; }
  const std::vector<DInterval>& edges() const { return edges_; }
  bool general_position() const { return general_position_; }

 private:
  int d_ = 1;
  std::vector<DInterval> edges_;
  bool general_position_ = false;
};

enum class CandidateMode { all_endpoints, right_endpoints };

// Endpoint values of every part, deduplicated and sorted. Any point x can be
// moved right to min{hi : x in part} without leaving any part containing x,
// so right endpoints are a complete search space for optimal covers. Any
// nonempty intersection of parts is a closed interval starting at some lo,
// so all endpoints witness every nonempty intersection.
std::vector<Rational> candidate_points(const DIntervalFamily& family, CandidateMode mode);

// Number of edges containing x.
int depth(const DIntervalFamily& family, const Rational& x);

// [max lo, min hi] if nonempty.
std::optional<Interval> common_intersection(std::span<const Interval> intervals);

struct EndpointWitness {
  Rational x;
  std::size_t owner;
  std::vector<std::size_t> others;
};

// The two (endpoint, rest-of-family) pairs of a pairwise-intersecting list:
// max lo with the interval attaining it, min hi with its interval. Ties go to
// the lowest index. Throws EmptyIntersection if the list has no common point.
std::array<EndpointWitness, 2> endpoint_witnesses(std::span<const Interval> intervals);

// A point in every edge of `subset`, searched over the left endpoints of the
// subset's parts. An empty subset yields nullopt.
std::optional<Rational> subset_intersection_point(const DIntervalFamily& family, std::span<const std::size_t> subset);

// Pairs of distinct intervals (global part numbering, edge-major) sharing an
// endpoint value, described for error messages. Empty means general position.
std::vector<std::string> general_position_violations(const DIntervalFamily& family);

// Grows the i-th part (1-based, edge-major) by i*eps on both sides with
// eps = 1/(L*(2N+2)), L the lcm of all denominators and N the part count.
// Disjoint parts stay disjoint and intersecting parts keep their common
// points, so the intersection pattern (and with it nu and tau) is unchanged.
DIntervalFamily repair_general_position(const DIntervalFamily& family);

}  // namespace piercing
