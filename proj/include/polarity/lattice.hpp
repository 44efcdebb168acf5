#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "polarity/frame.hpp"
#include "polarity/point_set.hpp"
#include "polarity/sorts.hpp"

namespace polarity {

/// A finite bounded lattice given by its order. Meet and join tables are derived
/// from the order and the constructor rejects posets that are not lattices.
class FiniteLattice {
 public:
  FiniteLattice() = default;
  /// `leq_pairs` may be any generating set; its reflexive-transitive closure is taken.
  FiniteLattice(std::vector<std::string> elements, const std::vector<std::pair<std::size_t, std::size_t>>& leq_pairs);

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(std::size_t x) const { return names_.at(x); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::optional<std::size_t> find(std::string_view name) const;
  std::size_t index_of(std::string_view name) const;

  bool leq(std::size_t x, std::size_t y) const { return leq_[x * size() + y]; }
  std::size_t meet(std::size_t x, std::size_t y) const { return meet_[x * size() + y]; }
  std::size_t join(std::size_t x, std::size_t y) const { return join_[x * size() + y]; }
  std::size_t bottom() const noexcept { return bottom_; }
  std::size_t top() const noexcept { return top_; }

  /// Covering-free listing of the full order as pairs (x, y) with x ≤ y.
  std::vector<std::pair<std::size_t, std::size_t>> order_pairs() const;
  bool is_distributive() const;

 private:
  std::vector<std::string> names_;
  std::vector<bool> leq_;
  std::vector<std::size_t> meet_;
  std::vector<std::size_t> join_;
  std::size_t bottom_ = 0;
  std::size_t top_ = 0;
};

/// A total n-ary operation on a lattice carrier tagged with its distribution type.
struct LatticeOperator {
  std::string name;
  DistributionType type;
  /// Row-major over the arguments: index = Σ args[j] · size^j.
  std::vector<std::size_t> table;

  std::size_t apply(std::span<const std::size_t> args, std::size_t lattice_size) const;
};

/// Builds an operator table by evaluating `f` on every argument tuple.
template <typename F>
LatticeOperator tabulate(const FiniteLattice& lattice, std::string name, DistributionType type, F&& f) {
  LatticeOperator op{std::move(name), std::move(type), {}};
  const std::size_t n = op.type.arity();
  std::size_t total = 1;
  for (std::size_t j = 0; j < n; ++j) total *= lattice.size();
  op.table.resize(total);
  std::vector<std::size_t> args(n, 0);
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::size_t rest = idx;
    for (std::size_t j = 0; j < n; ++j) {
      args[j] = rest % lattice.size();
      rest /= lattice.size();
    }
    op.table[idx] = f(std::span<const std::size_t>(args));
  }
  return op;
}

/// Throws NormalityError (naming operator, coordinate and arguments) unless `op`
/// preserves, in every coordinate, binary joins and the bottom of L^{i_j}, landing in
/// joins/bottom of L^{i_{n+1}}. (For sort ∂ "join" is meet and "bottom" is top.)
void check_normal(const FiniteLattice& lattice, const LatticeOperator& op);

/// A finite bounded lattice with named normal operators.
class FiniteLatticeExpansion {
 public:
  FiniteLatticeExpansion() = default;
  FiniteLatticeExpansion(FiniteLattice lattice, std::vector<LatticeOperator> operators);

  const FiniteLattice& lattice() const noexcept { return lattice_; }
  const std::vector<LatticeOperator>& operators() const noexcept { return operators_; }
  const LatticeOperator& op(std::string_view name) const;
  std::size_t apply(const LatticeOperator& op, std::span<const std::size_t> args) const {
    return op.apply(args, lattice_.size());
  }

 private:
  FiniteLattice lattice_;
  std::vector<LatticeOperator> operators_;
};

/// A formal concept: extent ⊆ A, intent ⊆ B, each the Galois image of the other.
struct Concept {
  PointSet extent;
  PointSet intent;

  friend bool operator==(const Concept&, const Concept&) = default;
};

/// All concepts of a frame ordered by extent inclusion; lattice element i is concepts[i].
struct ConceptLattice {
  std::vector<Concept> concepts;
  FiniteLattice lattice;

  std::optional<std::size_t> find_extent(const PointSet& extent) const;
};

/// Enumerates every concept (NextClosure over A, lectic order).
ConceptLattice all_concepts(const SortedFrame& frame);

/// Canonical frame of a finite lattice expansion: points of A and B are the lattice
/// elements (standing for principal filters and ideals; A-point of x is named `f_x`,
/// B-point `i_x`), incidence is the complement of ≤, and each operator φ yields a
/// relation with uRw̄ iff u ≤ φ(w̄) (output 1) or φ(w̄) ≤ u (output ∂).
SortedFrame canonical_frame(const FiniteLatticeExpansion& expansion);

/// The principal downset ↓x as a subset of A in the canonical frame.
PointSet principal_downset(const FiniteLattice& lattice, std::size_t x);
/// The principal upset ↑x as a subset of B in the canonical frame.
PointSet principal_upset(const FiniteLattice& lattice, std::size_t x);

/// An order isomorphism between two lattices if one exists (brute force; small lattices only).
std::optional<std::vector<std::size_t>> find_isomorphism(const FiniteLattice& from, const FiniteLattice& to);

}  // namespace polarity
