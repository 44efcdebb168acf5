#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "polarity/fol_formula.hpp"
#include "polarity/lattice_formula.hpp"
#include "polarity/modal_formula.hpp"
#include "polarity/semantics.hpp"

namespace polarity {

/// p_i ↦ β_i, each β_i a sort-∂ modal formula.
using TranslationAssignment = std::map<std::size_t, ModalFormula>;

enum class TranslationMode {
  Bullet,  ///< T•, sort-1 result
  Circle,  ///< T°, sort-∂ result
};

/// Modal translation (Bullet) and co-translation (Circle) of a lattice formula.
/// Operator symbols become named diamonds of the same name and sorting σ(δ).
/// Throws UnknownNameError for a variable missing from `asg`, SortError for a
/// non-∂ assignment entry.
ModalFormula translate(TranslationMode mode, const LatticeFormula& f, const TranslationAssignment& asg);

/// The lattice model on M's frame with V(p_i) = ■⦃β_i⦄.
LatticeModel induced_model(const ModalModel& model, const TranslationAssignment& asg);

struct TheoremCheck {
  std::string name;
  bool holds = true;
};

struct TranslationReport {
  std::vector<TheoremCheck> checks;
  bool holds() const;
  std::vector<std::string> failures() const;
};

/// Checks, in the induced model N of (M, asg):
///  extent     ⟦φ⟧_N = ⟦T•φ⟧ = ⟦⊟¬T°φ⟧ = ⟦⊟◇T•φ⟧   (and the same for ψ)
///  intent     ⦃φ⦄_N = ⦃T°φ⦄ = ⦃□¬T•φ⦄ = ⦃□◆T°φ⦄   (and the same for ψ)
///  entailment ⟦φ⟧_N ⊆ ⟦ψ⟧_N  iff  ⟦T•φ⟧ ⊆ ⟦T•ψ⟧  iff  ⦃T°ψ⦄ ⊆ ⦃T°φ⦄
TranslationReport verify_translation_theorem(const ModalModel& model, const TranslationAssignment& asg,
                                             const LatticeFormula& phi, const LatticeFormula& psi);

/// Local consequence in one model: ⟦α⟧ ⊆ ⟦β⟧ (formulas of equal sort).
bool model_entails(const ModalModel& model, const ModalFormula& lhs, const ModalFormula& rhs);
/// Global consequence on a frame: lhs valid under a valuation implies rhs valid under it.
bool frame_entails(const SortedFrame& frame, const ModalFormula& lhs, const ModalFormula& rhs,
                   std::size_t cap = valuation_cap());

/// Standard translation ST_x(θ); `x` must carry θ's sort. Bound variables are
/// named u1, u2, .. (sort 1) and v1, v2, .. (sort ∂) from a per-call counter.
FolFormula standard_translation(const ModalFormula& f, const FolVar& x);

/// ∀∂v (I(u,v) → ∃1z (I(z,v) ∧ Φ[u:=z])). Φ must have exactly one free variable,
/// `u`, of sort 1; otherwise PreconditionError.
FolFormula stability_transform(const FolFormula& f, const std::string& u);
/// The prenex placement ∀∂v ∃1z (I(u,v) → I(z,v) ∧ Φ[u:=z]).
FolFormula stability_transform_prenex(const FolFormula& f, const std::string& u);

struct StabilityWitness {
  std::size_t model = 0;
  std::size_t point = 0;
  /// Value of Φ at the point; the transform has the opposite value.
  bool original = false;
};

struct StabilityResult {
  bool stable = true;
  std::optional<StabilityWitness> witness;
};

/// Stability relative to a finite family of models: Φ and its stability transform
/// agree at every point of A in every model.
StabilityResult is_stable_fol(const FolFormula& f, const std::string& u, std::span<const ModalModel> family);

struct ModalStabilityResult {
  bool stable = true;
  std::size_t frame = 0;
  std::optional<Countermodel> counter;
};

/// ⟦α⟧ = ⟦⊟◇α⟧ under every valuation of `vars` (plus α's own variables) on every frame.
ModalStabilityResult is_stable_modal(const ModalFormula& alpha, std::span<const SortedFrame> frames,
                                     std::set<std::pair<Sort, std::size_t>> vars = {},
                                     std::size_t cap = valuation_cap());

/// For ⊟β, the lattice formula p0 and assignment {p0 ↦ β} whose bullet translation is ⊟β.
std::pair<LatticeFormula, TranslationAssignment> translation_preimage(const ModalFormula& boxed);

}  // namespace polarity
