#include <gtest/gtest.h>

#include "polarity/catalog.hpp"
#include "polarity/error.hpp"
#include "polarity/io.hpp"
#include "polarity/random.hpp"
#include "polarity/syntax.hpp"
#include "support.hpp"

namespace polarity {
namespace {

using testing::as;
using testing::bs;

template <typename F>
ParseError parse_error_of(F&& f) {
  try {
    f();
  } catch (const ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "expected a parse error";
  return ParseError(0, 0, "none");
}

TEST(FrameFormat, ReadsFrame) {
  const SortedFrame f = read_frame(
      "# comment\n"
      "sorts A: a0 a1  B: b0 b1\n"
      "I: a0 b1 ,\n"
      "   a1 b0\n"
      "rel R sort 1;1d : a0 a1 b0\n");
  EXPECT_EQ(f, testing::f0({SortedRelation{"R", SortingType::parse("1;1d"), {{0, 1, 0}}}}));
}

TEST(FrameFormat, RoundTripsRandomFrames) {
  Signature s;
  s.add("R", SortingType::parse("1;1d"));
  s.add("S", SortingType::parse("d;d"));
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const SortedFrame f = random_frame(1 + seed % 4, 1 + seed % 3, s, 0.4, seed);
    EXPECT_EQ(read_frame(write_frame(f)), f);
  }
  for (const auto& e : catalog_expansions()) {
    const SortedFrame f = canonical_frame(e.expansion);
    EXPECT_EQ(read_frame(write_frame(f)), f);
  }
}

TEST(FrameFormat, ErrorPositions) {
  const ParseError unknown = parse_error_of([] { read_frame("sorts A: a0  B: b0\nI: a0 b7\n"); });
  EXPECT_EQ(unknown.line(), 2u);
  EXPECT_EQ(unknown.column(), 7u);
  const ParseError sorted = parse_error_of([] { read_frame("sorts A: a0  B: b0\nrel R sort 1;1 : a0 b0\n"); });
  EXPECT_EQ(sorted.line(), 2u);
  EXPECT_THROW(read_frame("I: a0 b0\n"), ParseError);
  EXPECT_THROW(read_frame("sorts A: a0  B: a0\n"), ParseError);
  EXPECT_THROW(read_frame("sorts A:  B: b0\n"), ParseError);
  EXPECT_THROW(read_frame("sorts A: a0  B: b0\nbogus line\n"), ParseError);
}

TEST(ModelFormat, RoundTrip) {
  ModalValuation v;
  v.p[0] = as(2, {0});
  v.p[2] = as(2, {});
  v.q[1] = bs(2, {0, 1});
  const ModalModel m(testing::f0(), v);
  const ModalModel back = read_model(write_model(m));
  EXPECT_EQ(back.frame, m.frame);
  EXPECT_EQ(back.valuation, m.valuation);
}

TEST(ModelFormat, ValuationErrors) {
  const ParseError e = parse_error_of([] { read_model("sorts A: a0  B: b0\nval P0: b0\n"); });
  EXPECT_EQ(e.line(), 2u);
  EXPECT_THROW(read_model("sorts A: a0  B: b0\nval P0: a0\nval P0: a0\n"), ParseError);
  EXPECT_THROW(read_model("sorts A: a0  B: b0\nval X0: a0\n"), ParseError);
}

TEST(LatticeFormat, RoundTripsCatalog) {
  for (const auto& e : catalog_expansions()) {
    const FiniteLatticeExpansion back = read_lattice(write_lattice(e.expansion));
    EXPECT_EQ(back.lattice().names(), e.expansion.lattice().names());
    EXPECT_EQ(back.lattice().order_pairs(), e.expansion.lattice().order_pairs());
    ASSERT_EQ(back.operators().size(), e.expansion.operators().size());
    for (std::size_t k = 0; k < back.operators().size(); ++k) {
      EXPECT_EQ(back.operators()[k].name, e.expansion.operators()[k].name);
      EXPECT_EQ(back.operators()[k].type, e.expansion.operators()[k].type);
      EXPECT_EQ(back.operators()[k].table, e.expansion.operators()[k].table);
    }
  }
}

TEST(LatticeFormat, BundledFilesMatchCatalog) {
  for (const auto& e : catalog_expansions()) {
    const auto path = std::filesystem::path(POLARITY_CATALOG_DIR) / (e.lattice + "-" + e.preset + ".lat");
    const FiniteLatticeExpansion file = read_lattice(read_text_file(path));
    EXPECT_EQ(write_lattice(file), write_lattice(e.expansion)) << path;
  }
}

TEST(LatticeFormat, RejectsBadInput) {
  // Missing table entries.
  EXPECT_THROW(read_lattice("elems 0 1\nleq: 0 1\nop f type 1->1 table: 0 0\n"), ParseError);
  // Not normal: sends 0 to 1.
  EXPECT_THROW(read_lattice("elems 0 1\nleq: 0 1\nop f type 1->1 table: 0 1 , 1 1\n"), NormalityError);
  // No top.
  EXPECT_THROW(read_lattice("elems 0 a b\nleq: 0 a , 0 b\n"), Error);
  const ParseError e = parse_error_of([] { read_lattice("elems 0 1\nleq: 0 2\n"); });
  EXPECT_EQ(e.line(), 2u);
}

TEST(AssignmentFormat, RoundTrip) {
  Signature s;
  s.add("S", SortingType::parse("d;d"));
  const TranslationAssignment asg = read_assignment("p0 := Q0\n# note\np3 := <S>([d] P1) | ff\n", s);
  ASSERT_EQ(asg.size(), 2u);
  EXPECT_EQ(asg.at(0), ModalFormula::var(Sort::Del, 0));
  EXPECT_EQ(to_string(asg.at(3)), "<S>([d] P1) | ff");
  EXPECT_EQ(read_assignment(write_assignment(asg), s), asg);
}

TEST(AssignmentFormat, Errors) {
  EXPECT_THROW(read_assignment("p0 := P0\n", {}), Error);
  EXPECT_THROW(read_assignment("q0 := Q0\n", {}), ParseError);
  EXPECT_THROW(read_assignment("p0 := Q0\np0 := Q1\n", {}), ParseError);
  const ParseError e = parse_error_of([] { read_assignment("p0 := Q0\np1 := Q0 &\n", {}); });
  EXPECT_EQ(e.line(), 2u);
}

TEST(FormulaFile, Preamble) {
  const FormulaFile f = read_formula_file(
      "sig: R 1;11 , S d;1d\n"
      "rel T sort d;d\n"
      "var u : 1\n"
      "var v : d\n"
      "\n"
      "# formulas\n"
      "<R>(P0, P1)\n"
      "R(u, u, u) & I(u, v)\n");
  EXPECT_EQ(f.signature.relations().size(), 3u);
  EXPECT_EQ(f.signature.at("S"), SortingType::parse("d;1d"));
  EXPECT_EQ(f.variables.at("v"), VarSort::Del);
  ASSERT_EQ(f.formulas.size(), 2u);
  EXPECT_EQ(f.formulas[0].first, 7u);
  EXPECT_EQ(f.formulas[1].second, "R(u, u, u) & I(u, v)");
  EXPECT_NO_THROW(parse_fol(f.formulas[1].second, f.signature, f.variables, f.formulas[1].first));
}

TEST(Files, MissingFile) { EXPECT_THROW(read_text_file("/nonexistent/polarity.frame"), Error); }

TEST(Files, TestDataParses) {
  const std::filesystem::path dir(POLARITY_TEST_DATA);
  EXPECT_EQ(read_frame(read_text_file(dir / "f0.frame")), testing::f0());
  EXPECT_EQ(read_model(read_text_file(dir / "f0.model")).valuation.q.size(), 2u);
  EXPECT_EQ(read_assignment(read_text_file(dir / "a.asg"), {}).size(), 2u);
  EXPECT_EQ(write_set(testing::f0(), as(2, {0, 1})), "a0 a1");
}

}  // namespace
}  // namespace polarity
