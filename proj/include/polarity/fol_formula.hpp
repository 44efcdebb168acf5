#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "polarity/sorts.hpp"

namespace polarity {

/// Sort annotation of a first-order variable. `Any` marks variables of the unsorted
/// language obtained by sort reduction, ranging over A ∪ B.
enum class VarSort : std::uint8_t { One, Del, Any };

constexpr VarSort var_sort(Sort s) noexcept { return s == Sort::One ? VarSort::One : VarSort::Del; }

/// `1`, `d` or `any`.
std::string to_string(VarSort s);

struct FolVar {
  std::string name;
  VarSort sort = VarSort::One;

  friend bool operator==(const FolVar&, const FolVar&) = default;
  friend auto operator<=>(const FolVar&, const FolVar&) = default;
};

/// Formula of the sorted first-order language (and of its unsorted reduct).
///
/// Atoms: equality, the incidence predicate `I`, relation atoms (head first), unary
/// predicates P_i (sort 1) and Q_i (sort ∂), and the sort predicates U1/Ud.
class FolFormula {
 public:
  enum class Kind { Eq, Rel, Pred, SortPred, Not, And, Or, Implies, Forall, Exists };

  /// Sorted operands must agree in sort.
  static FolFormula eq(FolVar lhs, FolVar rhs);
  /// `I(u, v)`; sorted operands must be (1, ∂).
  static FolFormula incidence(FolVar u, FolVar v);
  /// Relation atom; sorted operands must match `sorting` (head first).
  static FolFormula rel(std::string name, SortingType sorting, std::vector<FolVar> vars);
  /// P_i(x) for sort 1, Q_i(x) for sort ∂.
  static FolFormula pred(Sort sort, std::size_t index, FolVar x);
  /// U1(x) or Ud(x).
  static FolFormula sort_pred(Sort sort, FolVar x);
  static FolFormula negation(FolFormula arg);
  static FolFormula conj(FolFormula lhs, FolFormula rhs);
  static FolFormula disj(FolFormula lhs, FolFormula rhs);
  static FolFormula implies(FolFormula lhs, FolFormula rhs);
  static FolFormula forall(FolVar x, FolFormula body);
  static FolFormula exists(FolVar x, FolFormula body);
  /// Conjunction of a list; the empty list is `x = x` for the supplied variable.
  static FolFormula conj_all(const std::vector<FolFormula>& parts, const FolVar& fallback);

  Kind kind() const noexcept { return node_->kind; }
  /// Relation name (`I` for incidence).
  const std::string& name() const noexcept { return node_->name; }
  const SortingType& sorting() const noexcept { return node_->sorting; }
  Sort pred_sort() const noexcept { return node_->pred_sort; }
  std::size_t index() const noexcept { return node_->index; }
  /// Atom operands, or the bound variable of a quantifier.
  const std::vector<FolVar>& vars() const noexcept { return node_->vars; }
  const FolVar& bound() const { return node_->vars.at(0); }
  const std::vector<FolFormula>& args() const noexcept { return node_->args; }
  const FolFormula& arg() const { return node_->args.at(0); }
  const FolFormula& lhs() const { return node_->args.at(0); }
  const FolFormula& rhs() const { return node_->args.at(1); }
  const FolFormula& body() const { return node_->args.at(0); }

  /// Free variables with their sorts.
  std::map<std::string, VarSort> free_variables() const;
  std::size_t size() const;
  const void* identity() const noexcept { return node_.get(); }

  friend bool operator==(const FolFormula& a, const FolFormula& b);

 private:
  struct Node {
    Kind kind;
    std::string name{};
    SortingType sorting{};
    Sort pred_sort = Sort::One;
    std::size_t index = 0;
    std::vector<FolVar> vars{};
    std::vector<FolFormula> args{};
  };
  explicit FolFormula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static FolFormula make(Node node);

  std::shared_ptr<const Node> node_;
};

/// Capture-avoiding substitution of the free occurrences of `from` by `to`
/// (bound variables clashing with `to` are renamed).
FolFormula substitute(const FolFormula& f, const std::string& from, const FolVar& to);

}  // namespace polarity
