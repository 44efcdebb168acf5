#pragma once

#include <cstddef>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "polarity/sorts.hpp"

namespace polarity {

/// Formula of the sorted modal language L = (L1, L∂).
///
/// Every node has exactly one sort. Primitive constructors are variables, ¬, ∧, →,
/// ⊟ (`[b]`, ∂ to 1), □ (`[d]`, 1 to ∂) and the named diamonds `<R>(..)`. The
/// remaining kinds (constants, ∨, ◆ = ¬⊟¬, ◇ = ¬□¬, named boxes) are kept as
/// sugar so that printing can preserve them; `expand_sugar` rewrites them away.
class ModalFormula {
 public:
  enum class Kind {
    Var,      ///< P_i (sort 1) or Q_i (sort ∂)
    Top,      ///< `top` / `tt`
    Bot,      ///< `bot` / `ff`
    Not,
    And,
    Or,
    Implies,
    BoxB,     ///< ⊟β, sort 1
    BoxD,     ///< □α, sort ∂
    DiaB,     ///< ◆β = ¬⊟¬β, sort 1
    DiaD,     ///< ◇α = ¬□¬α, sort ∂
    Diamond,  ///< <R>(θ̄), sort = output of R
    Box,      ///< [R](θ̄) = ¬<R>(¬θ̄)
  };

  static ModalFormula var(Sort sort, std::size_t index);
  static ModalFormula top(Sort sort);
  static ModalFormula bot(Sort sort);
  static ModalFormula negation(ModalFormula arg);
  /// Binary connectives throw SortError on mixed sorts.
  static ModalFormula conj(ModalFormula lhs, ModalFormula rhs);
  static ModalFormula disj(ModalFormula lhs, ModalFormula rhs);
  static ModalFormula implies(ModalFormula lhs, ModalFormula rhs);
  static ModalFormula box_b(ModalFormula beta);
  static ModalFormula box_d(ModalFormula alpha);
  static ModalFormula dia_b(ModalFormula beta);
  static ModalFormula dia_d(ModalFormula alpha);
  /// Argument sorts must match `sorting.inputs`.
  static ModalFormula diamond(std::string name, SortingType sorting, std::vector<ModalFormula> args);
  static ModalFormula box(std::string name, SortingType sorting, std::vector<ModalFormula> args);
  /// ^⊥β = ⊟¬β.
  static ModalFormula left_perp(ModalFormula beta);
  /// α^⊥ = □¬α.
  static ModalFormula right_perp(ModalFormula alpha);

  Kind kind() const noexcept { return node_->kind; }
  Sort sort() const noexcept { return node_->sort; }
  std::size_t index() const noexcept { return node_->index; }
  const std::string& name() const noexcept { return node_->name; }
  const SortingType& sorting() const noexcept { return node_->sorting; }
  const std::vector<ModalFormula>& args() const noexcept { return node_->args; }
  const ModalFormula& arg() const { return node_->args.at(0); }
  const ModalFormula& lhs() const { return node_->args.at(0); }
  const ModalFormula& rhs() const { return node_->args.at(1); }

  /// Nesting depth of modal operators (⊟, □, ◆, ◇, named diamonds and boxes).
  std::size_t modal_depth() const;
  std::size_t size() const;
  /// Variables occurring in the formula as (sort, index) pairs.
  std::set<std::pair<Sort, std::size_t>> variables() const;
  const void* identity() const noexcept { return node_.get(); }

  friend bool operator==(const ModalFormula& a, const ModalFormula& b);

 private:
  struct Node {
    Kind kind;
    Sort sort;
    std::size_t index = 0;
    std::string name{};
    SortingType sorting{};
    std::vector<ModalFormula> args{};
  };
  explicit ModalFormula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static ModalFormula make(Node node);

  std::shared_ptr<const Node> node_;
};

/// Rewrites sugar into the primitives ¬, ∧, →, ⊟, □ and named diamonds.
ModalFormula expand_sugar(const ModalFormula& f);

}  // namespace polarity
