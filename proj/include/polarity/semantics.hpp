#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "polarity/fol_formula.hpp"
#include "polarity/lattice.hpp"
#include "polarity/lattice_formula.hpp"
#include "polarity/modal_formula.hpp"
#include "polarity/model.hpp"

namespace polarity {

// ---- lattice language -----------------------------------------------------------

/// The concept (⟦φ⟧, ⦃φ⦄) of a lattice formula. Operators are interpreted by the
/// frame relation of the same name, whose sorting must be σ of the operator's type.
Concept lattice_extent(const LatticeModel& model, const LatticeFormula& f);
/// Satisfaction (point of A) or co-satisfaction (point of B).
bool sat_lattice(const LatticeModel& model, Sort sort, std::size_t point, const LatticeFormula& f);

// ---- sorted modal language --------------------------------------------------------

/// Pointwise satisfaction, transcribing the sorted interpretation clause by clause.
bool sat_modal(const ModalModel& model, std::size_t point, const ModalFormula& f);
/// ⟦α⟧ ⊆ A or ⦃β⦄ ⊆ B, computed with the set operators of the frame.
PointSet modal_extent(const ModalModel& model, const ModalFormula& f);

struct Countermodel {
  ModalValuation valuation;
  std::size_t point = 0;
};

struct ValidityResult {
  bool valid = true;
  std::optional<Countermodel> counter;
  std::size_t valuations_checked = 0;
};

/// Default cap on enumerated valuations, overridable with POLARITY_VALUATION_CAP.
std::size_t valuation_cap();

/// Number of valuations of `vars` on `frame`, saturating at SIZE_MAX.
std::size_t valuation_count(const SortedFrame& frame, const std::set<std::pair<Sort, std::size_t>>& vars);

/// Calls `f` on every valuation of `vars`; stops early when `f` returns false.
/// Throws ResourceError when the count exceeds `cap`.
void for_each_valuation(const SortedFrame& frame, const std::set<std::pair<Sort, std::size_t>>& vars,
                        std::size_t cap, const std::function<bool(const ModalValuation&)>& f);

/// Validity of θ at every point of its sort under every valuation of `vars`
/// (variables of θ are always included).
ValidityResult frame_valid_modal(const SortedFrame& frame, const ModalFormula& f,
                                 std::set<std::pair<Sort, std::size_t>> vars = {}, std::size_t cap = valuation_cap());

// ---- first-order ------------------------------------------------------------------

/// A point of A (sort One) or B (sort Del); unsorted variables range over both.
struct Point {
  Sort sort = Sort::One;
  std::size_t index = 0;

  friend bool operator==(const Point&, const Point&) = default;
  friend auto operator<=>(const Point&, const Point&) = default;
};

using FolAssignment = std::map<std::string, Point, std::less<>>;

/// Tarskian evaluation; sorted quantifiers range over A or B, unsorted ones over A ∪ B.
/// P_i/Q_i read `valuation`, U1/Ud test the sort, atoms are false on ill-sorted tuples.
/// Throws PreconditionError for unassigned or ill-sorted free variables.
bool eval_fol(const SortedFrame& frame, const ModalValuation& valuation, const FolAssignment& assignment,
              const FolFormula& f);

/// Sort reduct: sorted quantifiers are relativised to U1/Ud and every variable
/// becomes unsorted.
FolFormula sort_reduce(const FolFormula& f);

/// The sorting-constraint sentences of the unsorted language for `signature`
/// (including I): one relation-typing sentence per relation, the equality sentence,
/// and ∀x (U1(x) | Ud(x)).
std::vector<FolFormula> sorting_constraints(const Signature& signature);

}  // namespace polarity
