#pragma once

#include <map>
#include <string>
#include <string_view>

#include "polarity/fol_formula.hpp"
#include "polarity/lattice_formula.hpp"
#include "polarity/modal_formula.hpp"
#include "polarity/sorts.hpp"

namespace polarity {

// Surface syntax (ASCII):
//   lattice  p0  top  bot  a /\ b  a \/ b  f(a, b)
//   modal    P0 Q0  top bot (sort 1)  tt ff (sort ∂)  ~a  a & b  a | b  a -> b
//            [b] β   [d] α   <b> β   <d> α   <R>(θ1, ..)   [R](θ1, ..)
//   fol      u = z  I(u, v)  R(u, w1, ..)  P0(u)  Q0(v)  U1(x)  Ud(x)  ~ & | ->
//            all1 u . Φ  alld v . Φ  ex1 u . Φ  exd v . Φ  all x . Φ  ex x . Φ
// Precedence: ~ and prefix operators > & > | > ->, with -> right-associative and
// & / | left-associative. Quantifier bodies extend as far right as possible.

/// Operator names resolve against `signature`: a relation of sorting (o; i1..in) is
/// the lattice operator of distribution type (i1..in; o). Errors are ParseError
/// with a 1-based line/column; `line` offsets the reported line.
LatticeFormula parse_lattice(std::string_view text, const Signature& signature, std::size_t line = 1);
ModalFormula parse_modal(std::string_view text, const Signature& signature, std::size_t line = 1);
/// `free` declares the sorts of free variables; undeclared free variables are errors.
FolFormula parse_fol(std::string_view text, const Signature& signature,
                     const std::map<std::string, VarSort, std::less<>>& free = {}, std::size_t line = 1);

struct PrintOptions {
  /// Rewrite modal sugar (∨, constants, ◆, ◇, named boxes) into primitives.
  bool expand_sugar = false;
};

std::string to_string(const LatticeFormula& f);
std::string to_string(const ModalFormula& f, const PrintOptions& options = {});
std::string to_string(const FolFormula& f);

}  // namespace polarity
