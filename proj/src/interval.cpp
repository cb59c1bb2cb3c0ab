#include "piercing/interval.hpp"

#include "piercing/errors.hpp"

#include <algorithm>
#include <map>

namespace piercing {

Interval::Interval(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (hi_ < lo_) throw InvalidInstance("interval", "lo " + to_string(lo_) + " exceeds hi " + to_string(hi_));
}

DInterval::DInterval(std::vector<Interval> parts) : parts_(std::move(parts)) {
  std::sort(parts_.begin(), parts_.end(), [](const Interval& a, const Interval& b) { return a.lo() < b.lo(); });
  for (std::size_t i = 1; i < parts_.size(); ++i) {
    if (parts_[i].lo() <= parts_[i - 1].hi()) {
      throw InvalidInstance("parts", "parts [" + to_string(parts_[i - 1].lo()) + "," + to_string(parts_[i - 1].hi()) +
                                         "] and [" + to_string(parts_[i].lo()) + "," + to_string(parts_[i].hi()) +
                                         "] are not disjoint");
    }
  }
}

bool DInterval::contains(const Rational& x) const {
  return std::any_of(parts_.begin(), parts_.end(), [&](const Interval& p) { return p.contains(x); });
}

DIntervalFamily::DIntervalFamily(int d, std::vector<DInterval> edges, bool general_position)
    : d_(d), edges_(std::move(edges)), general_position_(general_position) {
  if (d_ < 1) throw InvalidInstance("/d", "d must be positive");
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const auto parts = edges_[i].parts().size();
    if (parts == 0) throw InvalidInstance("/edges/" + std::to_string(i), "edge has no parts");
    if (static_cast<int>(parts) > d_) {
      throw InvalidInstance("/edges/" + std::to_string(i),
                            "edge has " + std::to_string(parts) + " parts, more than d=" + std::to_string(d_));
    }
  }
  if (general_position_) {
    const auto bad = general_position_violations(*this);
    if (!bad.empty()) throw InvalidInstance("/edges", "not in general position: " + bad.front());
  }
}

std::vector<Rational> candidate_points(const DIntervalFamily& family, CandidateMode mode) {
  std::vector<Rational> out;
  for (const auto& edge : family.edges()) {
    for (const auto& part : edge.parts()) {
      if (mode == CandidateMode::all_endpoints) out.push_back(part.lo());
      out.push_back(part.hi());
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int depth(const DIntervalFamily& family, const Rational& x) {
  return static_cast<int>(std::count_if(family.edges().begin(), family.edges().end(),
                                        [&](const DInterval& e) { return e.contains(x); }));
}

std::optional<Interval> common_intersection(std::span<const Interval> intervals) {
  if (intervals.empty()) return std::nullopt;
  Rational lo = intervals.front().lo();
  Rational hi = intervals.front().hi();
  for (const auto& iv : intervals) {
    if (iv.lo() > lo) lo = iv.lo();
    if (iv.hi() < hi) hi = iv.hi();
  }
  if (hi < lo) return std::nullopt;
  return Interval(lo, hi);
}

std::array<EndpointWitness, 2> endpoint_witnesses(std::span<const Interval> intervals) {
  if (!common_intersection(intervals)) throw EmptyIntersection("intervals have no common point");
  std::size_t left = 0;
  std::size_t right = 0;
  for (std::size_t i = 1; i < intervals.size(); ++i) {
    if (intervals[i].lo() > intervals[left].lo()) left = i;
    if (intervals[i].hi() < intervals[right].hi()) right = i;
  }
  auto others = [&](std::size_t owner) {
    std::vector<std::size_t> rest;
    for (std::size_t i = 0; i < intervals.size(); ++i) {
      if (i != owner) rest.push_back(i);
    }
    return rest;
  };
  return {EndpointWitness{intervals[left].lo(), left, others(left)},
          EndpointWitness{intervals[right].hi(), right, others(right)}};
}

std::optional<Rational> subset_intersection_point(const DIntervalFamily& family, std::span<const std::size_t> subset) {
  if (subset.empty()) return std::nullopt;
  std::vector<Rational> candidates;
  for (std::size_t e : subset) {
    for (const auto& part : family.edges().at(e).parts()) candidates.push_back(part.lo());
  }
  std::sort(candidates.begin(), candidates.end());
  for (const auto& x : candidates) {
    if (std::all_of(subset.begin(), subset.end(), [&](std::size_t e) { return family.edges()[e].contains(x); })) {
      return x;
    }
  }
  return std::nullopt;
}

std::vector<std::string> general_position_violations(const DIntervalFamily& family) {
  // endpoint value -> global part ids using it
  std::map<Rational, std::vector<std::size_t>> owners;
  std::vector<std::string> labels;
  std::size_t id = 0;
  for (std::size_t e = 0; e < family.edges().size(); ++e) {
    const auto& parts = family.edges()[e].parts();
    for (std::size_t k = 0; k < parts.size(); ++k, ++id) {
      labels.push_back("edge " + std::to_string(e) + " part " + std::to_string(k));
      owners[parts[k].lo()].push_back(id);
      if (parts[k].hi() != parts[k].lo()) owners[parts[k].hi()].push_back(id);
    }
  }
  std::vector<std::string> out;
  for (const auto& [value, ids] : owners) {
    for (std::size_t i = 1; i < ids.size(); ++i) {
      out.push_back(labels[ids[0]] + " and " + labels[ids[i]] + " share endpoint " + to_string(value));
    }
  }
  return out;
}

DIntervalFamily repair_general_position(const DIntervalFamily& family) {
  mpz_class lcm = 1;
  std::size_t part_count = 0;
  for (const auto& edge : family.edges()) {
    for (const auto& part : edge.parts()) {
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), part.lo().get_den_mpz_t());
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), part.hi().get_den_mpz_t());
      ++part_count;
    }
  }
  Rational eps(mpz_class(1), lcm * mpz_class(static_cast<unsigned long>(2 * part_count + 2)));
  eps.canonicalize();

  std::vector<DInterval> edges;
  unsigned long index = 1;
  for (const auto& edge : family.edges()) {
    std::vector<Interval> parts;
    for (const auto& part : edge.parts()) {
      Rational shift = eps * index++;
      parts.emplace_back(part.lo() - shift, part.hi() + shift);
    }
    edges.emplace_back(std::move(parts));
  }
  return DIntervalFamily(family.d(), std::move(edges), true);
}

}  // namespace piercing
