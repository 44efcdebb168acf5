#include <gtest/gtest.h>

#include <set>

#include "polarity/catalog.hpp"
#include "polarity/error.hpp"
#include "polarity/galois.hpp"
#include "polarity/lattice.hpp"

namespace polarity {
namespace {

FiniteLattice diamond_with_extra_top() {
  // 0 < a, b < 1: B4 written out by hand.
  return FiniteLattice({"0", "a", "b", "1"}, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
}

TEST(FiniteLattice, MeetAndJoinFromOrder) {
  const FiniteLattice l = diamond_with_extra_top();
  const std::size_t a = l.index_of("a"), b = l.index_of("b");
  EXPECT_EQ(l.meet(a, b), l.index_of("0"));
  EXPECT_EQ(l.join(a, b), l.index_of("1"));
  EXPECT_EQ(l.bottom(), l.index_of("0"));
  EXPECT_EQ(l.top(), l.index_of("1"));
  EXPECT_TRUE(l.leq(l.bottom(), l.top()));
  EXPECT_FALSE(l.leq(a, b));
}

TEST(FiniteLattice, RejectsNonLattices) {
  // Two maximal elements and no top.
  EXPECT_THROW(FiniteLattice({"0", "a", "b"}, {{0, 1}, {0, 2}}), Error);
  // A cycle collapses antisymmetry.
  EXPECT_THROW(FiniteLattice({"x", "y"}, {{0, 1}, {1, 0}}), Error);
  // Two upper bounds of {a, b} with no least one.
  EXPECT_THROW(FiniteLattice({"0", "a", "b", "c", "d", "1"},
                             {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {1, 4}, {2, 4}, {3, 5}, {4, 5}}),
               Error);
}

TEST(Catalog, Distributivity) {
  for (const auto& name : catalog_lattice_names()) {
    const bool expected = name != "M3" && name != "N5";
    EXPECT_EQ(catalog_lattice(name).is_distributive(), expected) << name;
  }
  EXPECT_FALSE(catalog_supports("M3", "distributive"));
  EXPECT_FALSE(catalog_supports("N5", "distributive"));
  EXPECT_THROW(catalog_expansion("N5", "distributive"), DomainError);
  EXPECT_THROW(catalog_lattice("C9"), Error);
}

TEST(Catalog, SizesAndNames) {
  const std::vector<std::string> expected{"C2", "C3", "C4", "C5", "B4", "M3", "N5"};
  EXPECT_EQ(std::set<std::string>(catalog_lattice_names().begin(), catalog_lattice_names().end()),
            std::set<std::string>(expected.begin(), expected.end()));
  EXPECT_EQ(catalog_lattice("C5").size(), 5u);
  EXPECT_EQ(catalog_lattice("B4").size(), 4u);
  EXPECT_EQ(catalog_lattice("M3").size(), 5u);
  EXPECT_EQ(catalog_lattice("N5").size(), 5u);
  EXPECT_EQ(catalog_expansions().size(), 26u);
}

TEST(Catalog, EveryOperatorIsNormal) {
  for (const auto& e : catalog_expansions())
    for (const auto& op : e.expansion.operators())
      EXPECT_NO_THROW(check_normal(e.expansion.lattice(), op)) << e.lattice << "/" << e.preset << " " << op.name;
}

TEST(CheckNormal, RejectsConstantTop) {
  const FiniteLattice l = catalog_lattice("C2");
  const auto op = tabulate(l, "k", DistributionType::parse("1->1"), [&](auto) { return l.top(); });
  EXPECT_THROW(check_normal(l, op), NormalityError);
}

TEST(CheckNormal, RejectsJoinFailure) {
  // On B4 the map sending a, b to 0 and 1 to 1 keeps 0 but breaks a ∨ b.
  const FiniteLattice l = diamond_with_extra_top();
  const auto op = tabulate(l, "g", DistributionType::parse("1->1"),
                           [&](auto a) { return a[0] == l.top() ? l.top() : l.bottom(); });
  EXPECT_THROW(check_normal(l, op), NormalityError);
}

TEST(CheckNormal, DualOutputUsesMeets) {
  // For output ∂ the operator must send meets to joins of L^∂, i.e. meets, and top to top.
  const FiniteLattice l = catalog_lattice("C3");
  const auto id = tabulate(l, "box", DistributionType::parse("d->d"), [](auto a) { return a[0]; });
  EXPECT_NO_THROW(check_normal(l, id));
  const auto constant_bot = tabulate(l, "box", DistributionType::parse("d->d"), [&](auto) { return l.bottom(); });
  EXPECT_THROW(check_normal(l, constant_bot), NormalityError);
}

TEST(Isomorphism, CanonicalConceptLatticeForEveryCatalogLattice) {
  for (const auto& name : catalog_lattice_names()) {
    const FiniteLattice l = catalog_lattice(name);
    const SortedFrame frame = canonical_frame(FiniteLatticeExpansion(l, {}));
    const ConceptLattice cl = all_concepts(frame);
    ASSERT_EQ(cl.concepts.size(), l.size()) << name;
    for (std::size_t x = 0; x < l.size(); ++x) {
      const auto idx = cl.find_extent(principal_downset(l, x));
      ASSERT_TRUE(idx.has_value()) << name << " " << l.name(x);
      EXPECT_EQ(cl.concepts[*idx].intent, principal_upset(l, x));
    }
    EXPECT_TRUE(find_isomorphism(l, cl.lattice).has_value()) << name;
  }
}

TEST(Isomorphism, DistinguishesSameSizeLattices) {
  EXPECT_FALSE(find_isomorphism(catalog_lattice("B4"), catalog_lattice("C4")).has_value());
  EXPECT_FALSE(find_isomorphism(catalog_lattice("M3"), catalog_lattice("N5")).has_value());
  EXPECT_FALSE(find_isomorphism(catalog_lattice("N5"), catalog_lattice("C5")).has_value());
  EXPECT_TRUE(find_isomorphism(diamond_with_extra_top(), catalog_lattice("B4")).has_value());
}

TEST(CanonicalFrame, NamesAndIncidence) {
  const FiniteLattice l = catalog_lattice("C3");
  const SortedFrame f = canonical_frame(FiniteLatticeExpansion(l, {}));
  ASSERT_EQ(f.size_a(), 3u);
  for (std::size_t x = 0; x < 3; ++x) {
    EXPECT_EQ(f.name(Sort::One, x), "f_" + l.name(x));
    EXPECT_EQ(f.name(Sort::Del, x), "i_" + l.name(x));
    for (std::size_t y = 0; y < 3; ++y) EXPECT_EQ(f.incident(x, y), !l.leq(x, y));
  }
}

// Independent reading of the canonical relation: u and w_j are principal filters
// (sort 1) or ideals (sort ∂) materialised as element sets, and u R w̄ holds iff φ maps
// every argument tuple drawn from the w_j into u.
bool literal_relation(const FiniteLatticeExpansion& e, const LatticeOperator& op, std::size_t u,
                      const std::vector<std::size_t>& w) {
  const FiniteLattice& l = e.lattice();
  auto principal = [&](Sort s, std::size_t g) {
    std::set<std::size_t> out;
    for (std::size_t x = 0; x < l.size(); ++x)
      if (s == Sort::One ? l.leq(g, x) : l.leq(x, g)) out.insert(x);
    return out;
  };
  std::vector<std::vector<std::size_t>> choices;
  for (std::size_t j = 0; j < w.size(); ++j) {
    auto s = principal(op.type.inputs[j], w[j]);
    choices.emplace_back(s.begin(), s.end());
  }
  const auto target = principal(op.type.output, u);
  std::vector<std::size_t> pick(w.size(), 0), args(w.size());
  while (true) {
    for (std::size_t j = 0; j < w.size(); ++j) args[j] = choices[j][pick[j]];
    if (!target.count(e.apply(op, args))) return false;
    std::size_t j = 0;
    while (j < w.size() && ++pick[j] == choices[j].size()) pick[j++] = 0;
    if (j == w.size()) return true;
  }
}

TEST(CanonicalFrame, RelationMatchesLiteralReading) {
  std::size_t tuples = 0;
  for (const auto& e : catalog_expansions()) {
    const SortedFrame f = canonical_frame(e.expansion);
    for (const auto& op : e.expansion.operators()) {
      const SortedRelation& rel = f.relation(op.name);
      EXPECT_EQ(rel.sorting, sorting_of(op.type));
      std::vector<Sort> sorts(op.type.arity() + 1, Sort::One);
      for_each_tuple(f, sorts, [&](std::span<const std::size_t> t) {
        const std::vector<std::size_t> w(t.begin() + 1, t.end());
        EXPECT_EQ(f.holds(rel, t), literal_relation(e.expansion, op, t[0], w))
            << e.lattice << "/" << e.preset << " " << op.name;
        ++tuples;
      });
    }
  }
  EXPECT_GT(tuples, 1000u);
}

TEST(CanonicalFrame, ClosedOperatorReproducesOperator) {
  for (const auto& e : catalog_expansions()) {
    const SortedFrame f = canonical_frame(e.expansion);
    const FiniteLattice& l = e.expansion.lattice();
    for (const auto& op : e.expansion.operators()) {
      EXPECT_TRUE(is_section_stable(f, op.name).stable) << e.lattice << "/" << e.preset << " " << op.name;
      std::vector<Sort> sorts(op.type.arity(), Sort::One);
      for_each_tuple(f, sorts, [&](std::span<const std::size_t> w) {
        std::vector<PointSet> args;
        for (std::size_t j = 0; j < w.size(); ++j)
          args.push_back(op.type.inputs[j] == Sort::One ? principal_downset(l, w[j]) : principal_upset(l, w[j]));
        const std::size_t value = e.expansion.apply(op, w);
        const PointSet want = op.type.output == Sort::One ? principal_downset(l, value) : principal_upset(l, value);
        EXPECT_EQ(closed_op(f, op.name, args, ClosedMode::Sorted), want)
            << e.lattice << "/" << e.preset << " " << op.name;
      });
    }
  }
}

TEST(CatalogPresets, ModalOperatorsOnChains) {
  const auto e = catalog_expansion("C4", "modal");
  const auto& dia = e.op("dia");
  const auto& box = e.op("box");
  const std::vector<std::size_t> expected_dia{0, 0, 1, 2};
  const std::vector<std::size_t> expected_box{1, 2, 3, 3};
  for (std::size_t x = 0; x < 4; ++x) {
    const std::size_t arg[1] = {x};
    EXPECT_EQ(e.apply(dia, arg), expected_dia[x]);
    EXPECT_EQ(e.apply(box, arg), expected_box[x]);
  }
  EXPECT_THROW(e.op("nope"), UnknownNameError);
}

TEST(CatalogPresets, HeytingImplicationOnB4) {
  const auto e = catalog_expansion("B4", "implicative");
  const FiniteLattice& l = e.lattice();
  const auto& imp = e.op("imp");
  for (std::size_t x = 0; x < l.size(); ++x)
    for (std::size_t y = 0; y < l.size(); ++y) {
      const std::size_t args[2] = {x, y};
      const std::size_t z = e.apply(imp, args);
      // Residuation: w ≤ x → y iff w ∧ x ≤ y.
      for (std::size_t w = 0; w < l.size(); ++w) EXPECT_EQ(l.leq(w, z), l.leq(l.meet(w, x), y));
    }
}

TEST(CatalogPresets, SignatureMatchesCanonicalFrame) {
  for (const auto& preset : catalog_preset_names())
    EXPECT_EQ(catalog_preset_signature(preset), canonical_frame(catalog_expansion("C2", preset)).signature()) << preset;
}

}  // namespace
}  // namespace polarity
