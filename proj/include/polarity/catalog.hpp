#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "polarity/lattice.hpp"

namespace polarity {

/// Bundled lattices: chains `C2`..`C5`, the four-element Boolean lattice `B4`,
/// the diamond `M3` and the pentagon `N5`.
const std::vector<std::string>& catalog_lattice_names();
FiniteLattice catalog_lattice(std::string_view name);

/// Operator presets:
///  - `modal`:        dia (1;1), box (∂;∂)
///  - `implicative`:  imp (1,∂;∂)
///  - `fl`:           fus (1,1;1), imp (1,∂;∂), limp (∂,1;∂)
///  - `distributive`: meet (1,1;1), join (∂,∂;∂)   (distributive lattices only)
const std::vector<std::string>& catalog_preset_names();
SimilarityType catalog_preset_type(std::string_view preset);
/// Relation symbols of a preset, as they appear in canonical frames.
Signature catalog_preset_signature(std::string_view preset);

bool catalog_supports(std::string_view lattice, std::string_view preset);
/// Throws DomainError for unsupported combinations.
FiniteLatticeExpansion catalog_expansion(std::string_view lattice, std::string_view preset);

struct CatalogExpansion {
  std::string lattice;
  std::string preset;
  FiniteLatticeExpansion expansion;
};

/// Every supported (lattice, preset) pair, in catalog order.
std::vector<CatalogExpansion> catalog_expansions();

}  // namespace polarity
