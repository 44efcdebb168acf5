#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <utility>

#include "polarity/frame.hpp"
#include "polarity/modal_formula.hpp"
#include "polarity/model.hpp"

namespace polarity {

/// A well-sorted relation between the points of two frames: pairs (a, a') with
/// a ∈ A, a' ∈ A' and pairs (b, b') with b ∈ B, b' ∈ B'.
struct SortedPairRelation {
  std::set<std::pair<std::size_t, std::size_t>> pairs_a;
  std::set<std::pair<std::size_t, std::size_t>> pairs_b;

  const std::set<std::pair<std::size_t, std::size_t>>& pairs(Sort s) const { return s == Sort::One ? pairs_a : pairs_b; }
  std::set<std::pair<std::size_t, std::size_t>>& pairs(Sort s) { return s == Sort::One ? pairs_a : pairs_b; }
  bool contains(Sort s, std::size_t x, std::size_t y) const { return pairs(s).count({x, y}) != 0; }
  bool empty() const { return pairs_a.empty() && pairs_b.empty(); }
  std::size_t size() const { return pairs_a.size() + pairs_b.size(); }
  SortedPairRelation inverse() const;
  /// Identity on a frame.
  static SortedPairRelation identity(const SortedFrame& frame);

  friend bool operator==(const SortedPairRelation&, const SortedPairRelation&) = default;
};

SortedPairRelation operator|(const SortedPairRelation& x, const SortedPairRelation& y);

enum class SimClause {
  Incidence,  ///< forth along I (from a sort-1 pair to I-successors, from a sort-∂ pair to I-predecessors)
  Relation,   ///< forth along a relation whose output sort is the pair's sort
  Valuation,  ///< a related pair disagrees on a propositional variable
};

struct SimulationViolation {
  SimClause clause = SimClause::Incidence;
  Sort sort = Sort::One;
  std::pair<std::size_t, std::size_t> pair;
  /// Relation name for Relation, variable name (`P0`, `Q1`) for Valuation.
  std::string symbol;
  /// Unmatched witness: the neighbour point (Incidence) or the argument tuple (Relation).
  std::vector<std::size_t> witness;

  std::string describe(const SortedFrame& from, const SortedFrame& to) const;
};

/// Throws SortError when the relation is not well-sorted between the frames or the
/// frames' signatures differ.
std::optional<SimulationViolation> find_simulation_violation(const SortedFrame& from, const SortedFrame& to,
                                                             const SortedPairRelation& rel);
bool is_simulation(const SortedFrame& from, const SortedFrame& to, const SortedPairRelation& rel);
bool is_bisimulation(const SortedFrame& from, const SortedFrame& to, const SortedPairRelation& rel);

/// Frame bisimulation plus valuation transfer in both directions. Variables missing
/// from one valuation are read as the empty set. The violation of the inverse
/// direction is reported with the pair in (from, to) order.
std::optional<SimulationViolation> find_model_bisimulation_violation(const ModalModel& m, const ModalModel& n,
                                                                     const SortedPairRelation& rel);
bool is_model_bisimulation(const ModalModel& m, const ModalModel& n, const SortedPairRelation& rel);

/// The largest model bisimulation, by deleting violating pairs until a fixpoint.
SortedPairRelation largest_bisimulation(const ModalModel& m, const ModalModel& n);

struct EquivalenceResult {
  bool equivalent = true;
  /// Satisfied at the first point and refuted at the second.
  std::optional<ModalFormula> distinguishing;
};

/// Agreement of (m, x) and (n, y), points of sort `sort`, on every modal formula of
/// modal depth ≤ `depth` over the variables of both valuations.
EquivalenceResult modal_equiv(const ModalModel& m, Sort sort, std::size_t x, const ModalModel& n, std::size_t y,
                              std::size_t depth);

/// A depth bound at which bounded equivalence coincides with full modal equivalence.
std::size_t equivalence_depth_bound(const ModalModel& m, const ModalModel& n);

}  // namespace polarity
