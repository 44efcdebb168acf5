#pragma once

#include <initializer_list>
#include <string>

#include "polarity/frame.hpp"
#include "polarity/model.hpp"

namespace polarity::testing {

/// A = {a0, a1}, B = {b0, b1}, I = {(a0, b1), (a1, b0)}.
inline SortedFrame f0(std::vector<SortedRelation> relations = {}) {
  return SortedFrame({"a0", "a1"}, {"b0", "b1"}, {{0, 1}, {1, 0}}, std::move(relations));
}

inline PointSet as(std::size_t n, std::initializer_list<std::size_t> points) { return PointSet::of(Sort::One, n, points); }
inline PointSet bs(std::size_t n, std::initializer_list<std::size_t> points) { return PointSet::of(Sort::Del, n, points); }

inline SortedFrame frame_with_incidence(std::size_t na, std::size_t nb, std::vector<std::pair<std::size_t, std::size_t>> inc) {
  std::vector<std::string> a, b;
  for (std::size_t i = 0; i < na; ++i) a.push_back("a" + std::to_string(i));
  for (std::size_t i = 0; i < nb; ++i) b.push_back("b" + std::to_string(i));
  return SortedFrame(a, b, std::move(inc), {});
}

inline SortedFrame full_incidence(std::size_t na, std::size_t nb) {
  std::vector<std::pair<std::size_t, std::size_t>> inc;
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j) inc.emplace_back(i, j);
  return frame_with_incidence(na, nb, inc);
}

}  // namespace polarity::testing
