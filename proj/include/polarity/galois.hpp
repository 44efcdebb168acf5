#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "polarity/frame.hpp"

namespace polarity {

/// The Galois relation of the polarity: true iff (a, b) is *not* incident.
bool polarity_holds(const SortedFrame& frame, std::size_t a, std::size_t b);

enum class GaloisSide {
  Right,  ///< U ⊆ A  ↦  U^⊥ = {b | a ⊤ b for all a ∈ U}
  Left,   ///< V ⊆ B  ↦  ^⊥V = {a | a ⊤ b for all b ∈ V}
};

PointSet galois(const SortedFrame& frame, GaloisSide side, const PointSet& set);

/// The residuated pair generated by I, and their complements.
enum class ResidKind {
  DiaAB,  ///< ◆U = {b | ∃a ∈ U. aIb}
  BoxBA,  ///< ■V = {a | ∀b. aIb → b ∈ V}
  BoxAB,  ///< □U = −◆−U
  DiaBA,  ///< ◇V = −■−V
};

PointSet residop(const SortedFrame& frame, ResidKind kind, const PointSet& set);

/// Galois closure on either sort: ^⊥(U^⊥) for sort 1, (^⊥V)^⊥ for sort ∂.
PointSet closure(const SortedFrame& frame, Sort sort, const PointSet& set);
bool is_closed(const SortedFrame& frame, const PointSet& set);

/// Section R ū = {u | u R ū} of a relation at a fixed input tuple.
PointSet relation_section(const SortedFrame& frame, const SortedRelation& rel, std::span<const std::size_t> args);

/// The Galois dual R′ of a relation: R′ū = (Rū)^⊥ for output sort 1, ^⊥(Rū) for output sort ∂.
/// Precomputed over every input tuple.
class DualRelation {
 public:
  DualRelation(const SortedFrame& frame, std::string_view relation);

  const SortedRelation& relation() const noexcept { return *rel_; }
  /// Sort of the dual's head place (opposite of the relation's output).
  Sort head_sort() const noexcept { return opposite(rel_->sorting.output); }
  const PointSet& at(std::span<const std::size_t> args) const;

 private:
  std::size_t offset(std::span<const std::size_t> args) const;

  const SortedFrame* frame_;
  const SortedRelation* rel_;
  std::vector<PointSet> images_;
};

struct SectionWitness {
  /// 0 is the head place of the dual relation, j >= 1 the j-th argument place.
  std::size_t position = 0;
  /// The full dual tuple (head first); the entry at `position` is meaningless.
  Tuple fixed;
  PointSet section;
  PointSet closure;
};

struct SectionStability {
  bool stable = true;
  std::optional<SectionWitness> witness;
};

/// Checks that every section of the Galois dual relation is closed on its sort.
SectionStability is_section_stable(const SortedFrame& frame, std::string_view relation);

/// Sorted image operator α_R(W1..Wn) = {u | ∃w̄. uRw̄ ∧ ⋀ wj ∈ Wj}.
PointSet image_op(const SortedFrame& frame, std::string_view relation, std::span<const PointSet> args);

enum class ClosedMode {
  Sorted,      ///< args closed on their own sorts; result closed on the output sort
  FirstSort,   ///< all args stable subsets of A; result a stable subset of A
  SecondSort,  ///< all args co-stable subsets of B; result a co-stable subset of B
};

/// Closure of the image operator restricted to (co-)stable arguments. Non-closed
/// arguments raise PreconditionError naming the argument place.
PointSet closed_op(const SortedFrame& frame, std::string_view relation, std::span<const PointSet> args,
                   ClosedMode mode);

/// ∀a ∃b. aIb  and  ∀b ∃a. aIb.
bool check_seriality(const SortedFrame& frame);

}  // namespace polarity
