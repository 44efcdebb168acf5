#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "polarity/fol_formula.hpp"
#include "polarity/lattice_formula.hpp"
#include "polarity/modal_formula.hpp"
#include "polarity/random.hpp"
#include "polarity/transform.hpp"

namespace polarity {

/// Random lattice formula over p_0..p_{vars-1} and the operators of `signature`,
/// with depth() <= depth.
LatticeFormula random_lattice_formula(const Signature& signature, std::size_t vars, std::size_t depth, Rng& rng);

/// Random modal formula of the given sort over P_0..P_{p_vars-1}, Q_0..Q_{q_vars-1}
/// (a sort without variables falls back to constants) with modal_depth() <= depth.
ModalFormula random_modal_formula(Sort sort, const Signature& signature, std::size_t p_vars, std::size_t q_vars,
                                  std::size_t depth, Rng& rng);

/// Random assignment p_0..p_{vars-1} ↦ sort-∂ formulas of modal depth <= depth.
TranslationAssignment random_assignment(const Signature& signature, std::size_t vars, std::size_t p_vars,
                                        std::size_t q_vars, std::size_t depth, Rng& rng);

/// Random well-sorted first-order formula whose free variables are among `scope`.
/// Quantifiers bind fresh names x0, x1, ..; connective nesting is bounded by `depth`.
FolFormula random_fol_formula(const Signature& signature, const std::vector<FolVar>& scope, std::size_t p_vars,
                              std::size_t q_vars, std::size_t depth, Rng& rng);

/// A random signature drawn from the catalog presets.
Signature random_preset_signature(Rng& rng);

}  // namespace polarity
