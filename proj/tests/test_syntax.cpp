#include <gtest/gtest.h>

#include "polarity/error.hpp"
#include "polarity/generators.hpp"
#include "polarity/random.hpp"
#include "polarity/syntax.hpp"

namespace polarity {
namespace {

Signature sig(std::initializer_list<std::pair<const char*, const char*>> entries) {
  Signature s;
  for (const auto& [name, sorting] : entries) s.add(name, SortingType::parse(sorting));
  return s;
}

TEST(LatticeSyntax, OperatorApplication) {
  const Signature s = sig({{"f", "1;11"}});
  const LatticeFormula f = parse_lattice("p0 /\\ f(p1,p2)", s);
  ASSERT_EQ(f.kind(), LatticeFormula::Kind::And);
  EXPECT_EQ(f.lhs(), LatticeFormula::var(0));
  ASSERT_EQ(f.rhs().kind(), LatticeFormula::Kind::Op);
  EXPECT_EQ(f.rhs().name(), "f");
  EXPECT_EQ(f.rhs().type(), DistributionType::parse("1,1->1"));
  EXPECT_EQ(to_string(f), "p0 /\\ f(p1, p2)");
}

TEST(LatticeSyntax, SortingBecomesDistributionType) {
  const Signature s = sig({{"imp", "d;1d"}});
  const LatticeFormula f = parse_lattice("imp(p0, bot)", s);
  EXPECT_EQ(f.type(), DistributionType::parse("1,d->d"));
}

TEST(LatticeSyntax, Precedence) {
  const LatticeFormula f = parse_lattice("p0 \\/ p1 /\\ p2", {});
  ASSERT_EQ(f.kind(), LatticeFormula::Kind::Or);
  EXPECT_EQ(f.rhs().kind(), LatticeFormula::Kind::And);
  EXPECT_EQ(to_string(parse_lattice("(p0 \\/ p1) /\\ top", {})), "(p0 \\/ p1) /\\ top");
}

TEST(LatticeSyntax, Errors) {
  EXPECT_THROW(parse_lattice("g(p0)", {}), ParseError);
  EXPECT_THROW(parse_lattice("f(p0)", sig({{"f", "1;11"}})), ParseError);
  EXPECT_THROW(parse_lattice("p0 /\\", {}), ParseError);
}

TEST(ModalSyntax, BoxOverQ) {
  const ModalFormula f = parse_modal("[b] Q0", {});
  EXPECT_EQ(f.kind(), ModalFormula::Kind::BoxB);
  EXPECT_EQ(f.sort(), Sort::One);
  EXPECT_EQ(f.arg(), ModalFormula::var(Sort::Del, 0));
  EXPECT_EQ(to_string(f), "[b] Q0");
}

TEST(ModalSyntax, SortsOfConstantsAndModalities) {
  EXPECT_EQ(parse_modal("tt", {}).sort(), Sort::Del);
  EXPECT_EQ(parse_modal("bot", {}).sort(), Sort::One);
  EXPECT_EQ(parse_modal("[d] P0", {}).sort(), Sort::Del);
  EXPECT_EQ(parse_modal("<b> Q1", {}).sort(), Sort::One);
  EXPECT_EQ(parse_modal("<d> ~P0", {}).sort(), Sort::Del);
  const ModalFormula r = parse_modal("<R>(P0, Q0)", sig({{"R", "d;1d"}}));
  EXPECT_EQ(r.kind(), ModalFormula::Kind::Diamond);
  EXPECT_EQ(r.sort(), Sort::Del);
  EXPECT_EQ(r.modal_depth(), 1u);
}

TEST(ModalSyntax, PrecedenceAndAssociativity) {
  const ModalFormula imp = parse_modal("P0 -> P1 -> P2", {});
  ASSERT_EQ(imp.kind(), ModalFormula::Kind::Implies);
  EXPECT_EQ(imp.rhs().kind(), ModalFormula::Kind::Implies);
  const ModalFormula mixed = parse_modal("P0 | P1 & ~P2", {});
  ASSERT_EQ(mixed.kind(), ModalFormula::Kind::Or);
  EXPECT_EQ(mixed.rhs().kind(), ModalFormula::Kind::And);
  EXPECT_EQ(mixed.rhs().rhs().kind(), ModalFormula::Kind::Not);
  EXPECT_EQ(to_string(parse_modal("(P0 -> P1) -> P2", {})), "(P0 -> P1) -> P2");
}

TEST(ModalSyntax, ExpandSugar) {
  const ModalFormula f = parse_modal("<b> Q0", {});
  EXPECT_EQ(to_string(f), "<b> Q0");
  EXPECT_EQ(to_string(f, {.expand_sugar = true}), "~[b] ~Q0");
  const ModalFormula g = expand_sugar(parse_modal("P0 | top", {}));
  for (const auto& arg : g.args()) EXPECT_NE(arg.kind(), ModalFormula::Kind::Or);
  EXPECT_NE(g.kind(), ModalFormula::Kind::Or);
}

TEST(ModalSyntax, MixedSortsAreRejectedWithPosition) {
  try {
    parse_modal("P0 & Q0", {});
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 1u);
    EXPECT_GE(e.column(), 4u);
  }
  EXPECT_THROW(parse_modal("[b] P0", {}), ParseError);
  EXPECT_THROW(parse_modal("<R>(P0)", {}), ParseError);
}

TEST(ModalSyntax, ErrorLineOffset) {
  try {
    parse_modal("P0 & & P1", {}, 7);
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 7u);
    EXPECT_EQ(e.column(), 6u);
  }
}

TEST(FolSyntax, StabilityMatrix) {
  const std::map<std::string, VarSort, std::less<>> free{{"u", VarSort::One}};
  const FolFormula f = parse_fol("alld v . I(u,v) -> ex1 z . (I(z,v) & P0(z))", {}, free);
  ASSERT_EQ(f.kind(), FolFormula::Kind::Forall);
  EXPECT_EQ(f.bound(), (FolVar{"v", VarSort::Del}));
  ASSERT_EQ(f.body().kind(), FolFormula::Kind::Implies);
  EXPECT_EQ(f.body().lhs().kind(), FolFormula::Kind::Rel);
  EXPECT_EQ(f.body().lhs().name(), "I");
  ASSERT_EQ(f.body().rhs().kind(), FolFormula::Kind::Exists);
  EXPECT_EQ(f.body().rhs().bound().sort, VarSort::One);
  const auto fv = f.free_variables();
  ASSERT_EQ(fv.size(), 1u);
  EXPECT_EQ(fv.at("u"), VarSort::One);
  EXPECT_EQ(to_string(f), "alld v . I(u, v) -> (ex1 z . I(z, v) & P0(z))");
}

TEST(FolSyntax, SortErrors) {
  EXPECT_THROW(parse_fol("P0(u)", {}), ParseError);
  EXPECT_THROW(parse_fol("alld v . P0(v)", {}), ParseError);
  EXPECT_THROW(parse_fol("all1 u . alld v . I(v, u)", {}), ParseError);
  EXPECT_THROW(parse_fol("all1 u . alld v . u = v", {}), ParseError);
  EXPECT_NO_THROW(parse_fol("all x . ex y . I(x, y) | U1(x) | Ud(y)", {}));
}

TEST(FolSyntax, RelationAtoms) {
  const Signature s = sig({{"R", "1;1d"}});
  const FolFormula f = parse_fol("all1 u . ex1 w . exd v . R(u, w, v)", s);
  const FolFormula atom = f.body().body().body();
  EXPECT_EQ(atom.kind(), FolFormula::Kind::Rel);
  EXPECT_EQ(atom.sorting(), SortingType::parse("1;1d"));
  EXPECT_THROW(parse_fol("all1 u . R(u, u, u)", s), ParseError);
}

// Printing then parsing must give back the same tree.
TEST(RoundTrip, LatticeFormulas) {
  const Signature s = sig({{"f", "1;11"}, {"g", "d;1d"}, {"h", "d;d"}});
  Rng rng(11);
  for (int k = 0; k < 100; ++k) {
    const LatticeFormula f = random_lattice_formula(s, 3, 4, rng);
    EXPECT_EQ(parse_lattice(to_string(f), s), f) << to_string(f);
  }
}

TEST(RoundTrip, ModalFormulas) {
  const Signature s = sig({{"R", "1;1d"}, {"S", "d;d"}});
  Rng rng(12);
  for (int k = 0; k < 100; ++k) {
    const Sort sort = k % 2 ? Sort::Del : Sort::One;
    const ModalFormula f = random_modal_formula(sort, s, 2, 2, 3, rng);
    EXPECT_EQ(parse_modal(to_string(f), s), f) << to_string(f);
    const ModalFormula e = expand_sugar(f);
    EXPECT_EQ(parse_modal(to_string(f, {.expand_sugar = true}), s), e);
  }
}

TEST(RoundTrip, FolFormulas) {
  const Signature s = sig({{"R", "1;1d"}});
  const std::vector<FolVar> scope{{"u", VarSort::One}, {"v", VarSort::Del}};
  const std::map<std::string, VarSort, std::less<>> free{{"u", VarSort::One}, {"v", VarSort::Del}};
  Rng rng(13);
  for (int k = 0; k < 100; ++k) {
    const FolFormula f = random_fol_formula(s, scope, 2, 2, 3, rng);
    EXPECT_EQ(parse_fol(to_string(f), s, free), f) << to_string(f);
  }
}

TEST(Signature, ReservedAndDuplicateNames) {
  Signature s;
  EXPECT_THROW(s.add("I", SortingType::parse("1;1")), DomainError);
  EXPECT_THROW(s.add("P3", SortingType::parse("1;1")), DomainError);
  s.add("R", SortingType::parse("1;1"));
  EXPECT_THROW(s.add("R", SortingType::parse("d;d")), DomainError);
  EXPECT_TRUE(is_reserved_symbol("b"));
  EXPECT_FALSE(is_reserved_symbol("dia"));
  EXPECT_EQ(SortingType::parse("d;1d").to_string(), "d;1d");
  EXPECT_EQ(DistributionType::parse("1,d->d").to_string(), "1,d->d");
  EXPECT_THROW(SortingType::parse("x;1"), Error);
}

}  // namespace
}  // namespace polarity
