#pragma once

#include <cstddef>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "polarity/sorts.hpp"

namespace polarity {

/// Formula of the lattice language: variables p_i, top, bot, ∧, ∨ and named
/// operators of a declared distribution type. Immutable, structurally shared.
class LatticeFormula {
 public:
  enum class Kind { Var, Top, Bot, And, Or, Op };

  static LatticeFormula var(std::size_t index);
  static LatticeFormula top();
  static LatticeFormula bot();
  static LatticeFormula conj(LatticeFormula lhs, LatticeFormula rhs);
  static LatticeFormula disj(LatticeFormula lhs, LatticeFormula rhs);
  /// Throws SortError when the argument count differs from the type's arity.
  static LatticeFormula op(std::string name, DistributionType type, std::vector<LatticeFormula> args);

  Kind kind() const noexcept { return node_->kind; }
  std::size_t index() const noexcept { return node_->index; }
  const std::string& name() const noexcept { return node_->name; }
  const DistributionType& type() const noexcept { return node_->type; }
  const std::vector<LatticeFormula>& args() const noexcept { return node_->args; }
  const LatticeFormula& lhs() const { return node_->args.at(0); }
  const LatticeFormula& rhs() const { return node_->args.at(1); }

  std::size_t depth() const;
  std::size_t size() const;
  std::set<std::size_t> variables() const;
  const void* identity() const noexcept { return node_.get(); }

  friend bool operator==(const LatticeFormula& a, const LatticeFormula& b);

 private:
  struct Node {
    Kind kind;
    std::size_t index = 0;
    std::string name{};
    DistributionType type{};
    std::vector<LatticeFormula> args{};
  };
  explicit LatticeFormula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

}  // namespace polarity
