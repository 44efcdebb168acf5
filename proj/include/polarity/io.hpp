#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "polarity/fol_formula.hpp"
#include "polarity/frame.hpp"
#include "polarity/lattice.hpp"
#include "polarity/model.hpp"
#include "polarity/transform.hpp"

namespace polarity {

// Line-based formats; `#` starts a comment, a line ending in `,` continues on the
// next one. Parse errors are ParseError with line and column. See docs/FORMATS.md.

/// sorts A: a0 a1  B: b0 b1
/// I: a0 b1 , a1 b0
/// rel R sort 1;11 : a0 a0 a1 , a1 a1 a0
SortedFrame read_frame(std::string_view text);
/// A frame followed by `val P0: a0 a1` / `val Q0: b1` lines.
ModalModel read_model(std::string_view text);
/// elems 0 a b 1
/// leq: 0 a , 0 b , a 1 , b 1
/// op f type 1,d->d table: 0 0 1 , 0 a 1 , ...
FiniteLatticeExpansion read_lattice(std::string_view text);
/// p0 := <sort-∂ modal formula>   (named diamonds resolve against `signature`)
TranslationAssignment read_assignment(std::string_view text, const Signature& signature);

/// A formula file: preamble lines `sig: R 1;11 , S d;1d`, `rel R sort 1;11` and
/// `var u : 1`, then one formula per line.
struct FormulaFile {
  Signature signature;
  std::map<std::string, VarSort, std::less<>> variables;
  /// Raw formula lines with their line numbers, parsed by the caller's language.
  std::vector<std::pair<std::size_t, std::string>> formulas;
};
FormulaFile read_formula_file(std::string_view text);

std::string write_frame(const SortedFrame& frame);
std::string write_model(const ModalModel& model);
std::string write_lattice(const FiniteLatticeExpansion& expansion);
std::string write_assignment(const TranslationAssignment& asg);
/// Space-separated point names of a set, in index order.
std::string write_set(const SortedFrame& frame, const PointSet& set);

/// Reads a file into a string; throws Error when it cannot be opened.
std::string read_text_file(const std::filesystem::path& path);

}  // namespace polarity
