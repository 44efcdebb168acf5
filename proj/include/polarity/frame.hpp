#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "polarity/point_set.hpp"
#include "polarity/sorts.hpp"

namespace polarity {

/// A tuple of a sorted relation: `head` followed by the n arguments.
using Tuple = std::vector<std::size_t>;

/// A sorted (n+1)-ary relation R ⊆ Z_out × Z_i1 × ... × Z_in, stored as point indices.
struct SortedRelation {
  std::string name;
  SortingType sorting;
  /// Head first; kept sorted and duplicate-free by SortedFrame.
  std::vector<Tuple> tuples;

  std::size_t arity() const noexcept { return sorting.arity(); }
};

/// A finite two-sorted frame (A, I, B, relations).
///
/// A and B are disjoint, non-empty, named point sets. The frame stores the
/// incidence I ⊆ A × B; the Galois relation of the polarity is its complement.
/// Immutable after construction.
class SortedFrame {
 public:
  SortedFrame() = default;
  /// Validates names, well-sortedness of all pairs/tuples and non-emptiness of both sorts.
  SortedFrame(std::vector<std::string> points_a, std::vector<std::string> points_b,
              std::vector<std::pair<std::size_t, std::size_t>> incidence, std::vector<SortedRelation> relations);

  std::size_t size(Sort s) const noexcept { return s == Sort::One ? names_a_.size() : names_b_.size(); }
  std::size_t size_a() const noexcept { return names_a_.size(); }
  std::size_t size_b() const noexcept { return names_b_.size(); }

  const std::string& name(Sort s, std::size_t i) const;
  const std::vector<std::string>& names(Sort s) const noexcept { return s == Sort::One ? names_a_ : names_b_; }
  std::optional<std::size_t> find(Sort s, std::string_view name) const;
  /// Throws DomainError if `name` is not a point of sort `s`.
  std::size_t index_of(Sort s, std::string_view name) const;

  bool incident(std::size_t a, std::size_t b) const;
  /// I-successors of a (subset of B).
  const PointSet& incidence_row(std::size_t a) const { return rows_.at(a); }
  /// I-predecessors of b (subset of A).
  const PointSet& incidence_column(std::size_t b) const { return cols_.at(b); }
  std::vector<std::pair<std::size_t, std::size_t>> incidence_pairs() const;

  const std::vector<SortedRelation>& relations() const noexcept { return relations_; }
  const SortedRelation* find_relation(std::string_view name) const;
  /// Throws UnknownNameError.
  const SortedRelation& relation(std::string_view name) const;
  bool holds(const SortedRelation& rel, std::span<const std::size_t> tuple) const;

  Signature signature() const;

  PointSet empty_set(Sort s) const { return PointSet(s, size(s)); }
  PointSet full_set(Sort s) const { return PointSet::full(s, size(s)); }
  /// Throws SortError unless `set` is a subset of the carrier of sort `s`.
  void check_set(const PointSet& set, Sort s, std::string_view what) const;

  friend bool operator==(const SortedFrame& a, const SortedFrame& b);

 private:
  std::vector<std::string> names_a_;
  std::vector<std::string> names_b_;
  std::map<std::string, std::size_t, std::less<>> index_a_;
  std::map<std::string, std::size_t, std::less<>> index_b_;
  std::vector<PointSet> rows_;
  std::vector<PointSet> cols_;
  std::vector<SortedRelation> relations_;
};

/// Visits every tuple of the product Z_{sorts[0]} × ... of a frame's carriers.
template <typename F>
void for_each_tuple(const SortedFrame& frame, std::span<const Sort> sorts, F&& f) {
  std::vector<std::size_t> tuple(sorts.size(), 0);
  for (Sort s : sorts)
    if (frame.size(s) == 0) return;
  while (true) {
    f(std::span<const std::size_t>(tuple));
    std::size_t k = 0;
    while (k < sorts.size()) {
      if (++tuple[k] < frame.size(sorts[k])) break;
      tuple[k] = 0;
      ++k;
    }
    if (k == sorts.size()) return;
  }
}

}  // namespace polarity
