#include <gtest/gtest.h>

#include "polarity/bisim.hpp"
#include "polarity/error.hpp"
#include "polarity/generators.hpp"
#include "polarity/random.hpp"
#include "polarity/semantics.hpp"
#include "polarity/syntax.hpp"
#include "support.hpp"

namespace polarity {
namespace {

using testing::as;
using testing::bs;
using testing::f0;

ModalModel f0_model() {
  ModalValuation v;
  v.p[0] = as(2, {0});
  v.q[0] = bs(2, {1});
  return ModalModel(f0(), v);
}

TEST(Simulation, TrivialRelations) {
  const SortedFrame f = f0();
  EXPECT_TRUE(is_bisimulation(f, f, SortedPairRelation{}));
  EXPECT_TRUE(is_bisimulation(f, f, SortedPairRelation::identity(f)));
  const ModalModel m = f0_model();
  EXPECT_TRUE(is_model_bisimulation(m, m, SortedPairRelation::identity(f)));
  EXPECT_TRUE(is_model_bisimulation(m, m, SortedPairRelation{}));
}

TEST(Simulation, IncidenceClauseAgainstEmptyIncidence) {
  const SortedFrame f = f0();
  const SortedFrame g = testing::frame_with_incidence(2, 2, {});
  SortedPairRelation rel;
  rel.pairs_a.insert({0, 0});
  const auto v = find_simulation_violation(f, g, rel);
  ASSERT_TRUE(v.has_value());
  EXPECT_EQ(v->clause, SimClause::Incidence);
  EXPECT_EQ(v->sort, Sort::One);
  EXPECT_EQ(v->pair, (std::pair<std::size_t, std::size_t>{0, 0}));
  ASSERT_EQ(v->witness.size(), 1u);
  EXPECT_EQ(v->witness[0], 1u);
  EXPECT_FALSE(v->describe(f, g).empty());
  // The other direction has nothing to match.
  EXPECT_TRUE(is_simulation(g, f, rel));
}

TEST(Simulation, ValuationMismatch) {
  const ModalModel m = f0_model();
  ModalValuation other = m.valuation;
  other.p[0] = as(2, {1});
  const ModalModel n(m.frame, other);
  const auto v = find_model_bisimulation_violation(m, n, SortedPairRelation::identity(m.frame));
  ASSERT_TRUE(v.has_value());
  EXPECT_EQ(v->clause, SimClause::Valuation);
  EXPECT_EQ(v->symbol, "P0");
  EXPECT_TRUE(is_bisimulation(m.frame, n.frame, SortedPairRelation::identity(m.frame)));
}

TEST(Simulation, MissingVariableReadsAsEmpty) {
  const SortedFrame f = f0();
  ModalValuation with_empty;
  with_empty.p[0] = as(2, {});
  EXPECT_TRUE(is_model_bisimulation(ModalModel(f, with_empty), ModalModel(f, {}), SortedPairRelation::identity(f)));
}

TEST(Simulation, IllSortedRelation) {
  SortedPairRelation rel;
  rel.pairs_a.insert({5, 0});
  EXPECT_THROW(is_simulation(f0(), f0(), rel), SortError);
  const SortedFrame with_r = f0({SortedRelation{"R", SortingType::parse("1;1"), {}}});
  EXPECT_THROW(is_simulation(f0(), with_r, SortedPairRelation{}), SortError);
}

TEST(Simulation, RelationClause) {
  // a0 R a1 on the left, nothing on the right.
  const SortedFrame f = f0({SortedRelation{"R", SortingType::parse("1;1"), {{0, 1}}}});
  const SortedFrame g = f0({SortedRelation{"R", SortingType::parse("1;1"), {}}});
  const auto v = find_simulation_violation(f, g, SortedPairRelation::identity(f));
  ASSERT_TRUE(v.has_value());
  EXPECT_EQ(v->clause, SimClause::Relation);
  EXPECT_EQ(v->symbol, "R");
  EXPECT_EQ(v->pair.first, 0u);
}

TEST(LargestBisimulation, ContainsIdentity) {
  Rng rng(71);
  for (int k = 0; k < 30; ++k) {
    Signature s;
    s.add("R", SortingType::parse("d;1"));
    const SortedFrame f = random_frame(1 + rng.below(4), 1 + rng.below(4), s, 0.4, rng);
    const ModalModel m = random_modal_model(f, 1, 1, rng);
    const SortedPairRelation z = largest_bisimulation(m, m);
    const SortedPairRelation id = SortedPairRelation::identity(f);
    for (Sort s2 : {Sort::One, Sort::Del})
      for (const auto& p : id.pairs(s2)) EXPECT_TRUE(z.contains(s2, p.first, p.second));
    EXPECT_TRUE(is_model_bisimulation(m, m, z));
  }
}

// M' is M plus a copy a2 of a0 with the same incidence, relation tuples and valuation.
TEST(LargestBisimulation, PairsDuplicatePoint) {
  const SortedRelation r{"R", SortingType::parse("1;1"), {{0, 1}, {1, 0}}};
  const SortedFrame f({"a0", "a1"}, {"b0", "b1"}, {{0, 1}, {1, 0}, {1, 1}}, {r});
  const SortedRelation r2{"R", SortingType::parse("1;1"), {{0, 1}, {1, 0}, {2, 1}, {1, 2}}};
  const SortedFrame g({"a0", "a1", "a2"}, {"b0", "b1"}, {{0, 1}, {1, 0}, {1, 1}, {2, 1}}, {r2});
  ModalValuation v, w;
  v.p[0] = as(2, {0});
  w.p[0] = as(3, {0, 2});
  const SortedPairRelation z = largest_bisimulation(ModalModel(f, v), ModalModel(g, w));
  EXPECT_TRUE(z.contains(Sort::One, 0, 0));
  EXPECT_TRUE(z.contains(Sort::One, 0, 2));
  EXPECT_TRUE(z.contains(Sort::One, 1, 1));
  EXPECT_FALSE(z.contains(Sort::One, 1, 2));
}

SortedPairRelation relation_from_mask(unsigned mask, std::size_t na, std::size_t na2, std::size_t nb, std::size_t nb2) {
  SortedPairRelation rel;
  unsigned bit = 0;
  for (std::size_t x = 0; x < na; ++x)
    for (std::size_t y = 0; y < na2; ++y, ++bit)
      if (mask >> bit & 1u) rel.pairs_a.insert({x, y});
  for (std::size_t x = 0; x < nb; ++x)
    for (std::size_t y = 0; y < nb2; ++y, ++bit)
      if (mask >> bit & 1u) rel.pairs_b.insert({x, y});
  return rel;
}

// On 2+2 point models every candidate relation is enumerated; the fixpoint must equal
// the union of those that are bisimulations.
TEST(LargestBisimulation, EqualsUnionOfAllBisimulations) {
  Rng rng(73);
  Signature s;
  s.add("R", SortingType::parse("1;d"));
  for (int k = 0; k < 40; ++k) {
    const SortedFrame f = random_frame(2, 2, s, 0.5, rng);
    const SortedFrame g = random_frame(2, 2, s, 0.5, rng);
    ModalModel m = random_modal_model(f, 1, 0, rng);
    ModalModel n = random_modal_model(g, 1, 0, rng);
    if (k % 2) {
      m = ModalModel(f, {});
      n = ModalModel(g, {});
    }
    SortedPairRelation all;
    std::size_t found = 0;
    for (unsigned mask = 0; mask < 256; ++mask) {
      const SortedPairRelation rel = relation_from_mask(mask, 2, 2, 2, 2);
      if (is_model_bisimulation(m, n, rel)) {
        all = all | rel;
        ++found;
      }
    }
    EXPECT_GE(found, 1u);
    EXPECT_EQ(largest_bisimulation(m, n), all) << "instance " << k;
  }
}

TEST(ModalEquivalence, BisimilarPointsAgree) {
  Signature s;
  s.add("R", SortingType::parse("1;1d"));
  Rng rng(79);
  std::size_t pairs = 0;
  for (int k = 0; k < 30; ++k) {
    const SortedFrame f = random_frame(1 + rng.below(3), 1 + rng.below(3), s, 0.4, rng);
    const SortedFrame g = random_frame(1 + rng.below(3), 1 + rng.below(3), s, 0.4, rng);
    const ModalModel m = random_modal_model(f, 1, 1, rng);
    const ModalModel n = k % 2 ? m : random_modal_model(g, 1, 1, rng);
    const SortedPairRelation z = largest_bisimulation(m, n);
    std::vector<ModalFormula> corpus;
    for (int j = 0; j < 20; ++j) corpus.push_back(random_modal_formula(j % 2 ? Sort::One : Sort::Del, s, 1, 1, 3, rng));
    for (Sort sort : {Sort::One, Sort::Del})
      for (const auto& [x, y] : z.pairs(sort)) {
        ++pairs;
        for (const auto& theta : corpus) {
          if (theta.sort() != sort) continue;
          EXPECT_EQ(sat_modal(m, x, theta), sat_modal(n, y, theta)) << to_string(theta);
        }
        EXPECT_TRUE(modal_equiv(m, sort, x, n, y, 2).equivalent);
      }
  }
  EXPECT_GT(pairs, 20u);
}

TEST(ModalEquivalence, NonBisimilarPointsAreSeparated) {
  Rng rng(83);
  std::size_t separated = 0;
  for (int k = 0; k < 30; ++k) {
    const SortedFrame f = random_frame(1 + rng.below(3), 1 + rng.below(3), {}, 0.5, rng);
    const SortedFrame g = random_frame(1 + rng.below(3), 1 + rng.below(3), {}, 0.5, rng);
    const ModalModel m = random_modal_model(f, 1, 1, rng);
    const ModalModel n = random_modal_model(g, 1, 1, rng);
    const SortedPairRelation z = largest_bisimulation(m, n);
    const std::size_t depth = f.size_a() * g.size_a() + f.size_b() * g.size_b();
    for (Sort sort : {Sort::One, Sort::Del})
      for (std::size_t x = 0; x < f.size(sort); ++x)
        for (std::size_t y = 0; y < g.size(sort); ++y) {
          if (z.contains(sort, x, y)) continue;
          const EquivalenceResult r = modal_equiv(m, sort, x, n, y, depth);
          ASSERT_FALSE(r.equivalent);
          ASSERT_TRUE(r.distinguishing.has_value());
          EXPECT_EQ(r.distinguishing->sort(), sort);
          EXPECT_TRUE(sat_modal(m, x, *r.distinguishing)) << to_string(*r.distinguishing);
          EXPECT_FALSE(sat_modal(n, y, *r.distinguishing)) << to_string(*r.distinguishing);
          ++separated;
        }
  }
  EXPECT_GT(separated, 20u);
}

TEST(ModalEquivalence, SelfAtEveryDepth) {
  const ModalModel m = f0_model();
  for (std::size_t d = 0; d < 4; ++d)
    for (std::size_t x = 0; x < 2; ++x) EXPECT_TRUE(modal_equiv(m, Sort::One, x, m, x, d).equivalent);
  EXPECT_GE(equivalence_depth_bound(m, m), 1u);
}

}  // namespace
}  // namespace polarity
