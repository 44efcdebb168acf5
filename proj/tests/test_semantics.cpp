#include <gtest/gtest.h>

#include "polarity/error.hpp"
#include "polarity/galois.hpp"
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
using MF = ModalFormula;

ModalModel f0_model() {
  ModalValuation v;
  v.p[0] = as(2, {0});
  v.q[0] = bs(2, {1});
  v.q[1] = bs(2, {0});
  return ModalModel(f0(), v);
}

TEST(LatticeSemantics, VariableOnF0) {
  const LatticeModel m(f0(), {{0, as(2, {0})}});
  const Concept c = lattice_extent(m, LatticeFormula::var(0));
  EXPECT_EQ(c.extent, as(2, {0}));
  EXPECT_EQ(c.intent, bs(2, {0}));
  EXPECT_TRUE(sat_lattice(m, Sort::One, 0, LatticeFormula::var(0)));
  EXPECT_FALSE(sat_lattice(m, Sort::One, 1, LatticeFormula::var(0)));
  EXPECT_TRUE(sat_lattice(m, Sort::Del, 0, LatticeFormula::var(0)));
  EXPECT_FALSE(sat_lattice(m, Sort::Del, 1, LatticeFormula::var(0)));
}

TEST(LatticeSemantics, ConstantsAndConnectives) {
  const LatticeModel m(f0(), {{0, as(2, {0})}, {1, as(2, {1})}});
  const Concept top = lattice_extent(m, LatticeFormula::top());
  EXPECT_EQ(top.extent, as(2, {0, 1}));
  EXPECT_EQ(top.intent, bs(2, {}));
  const Concept bot = lattice_extent(m, LatticeFormula::bot());
  EXPECT_EQ(bot.extent, as(2, {}));
  EXPECT_EQ(bot.intent, bs(2, {0, 1}));
  const auto p0 = LatticeFormula::var(0), p1 = LatticeFormula::var(1);
  EXPECT_EQ(lattice_extent(m, LatticeFormula::conj(p0, p1)).extent, as(2, {}));
  // On B4 the join of the atoms is the top concept.
  EXPECT_EQ(lattice_extent(m, LatticeFormula::disj(p0, p1)).extent, as(2, {0, 1}));
}

TEST(LatticeSemantics, NonStableValuation) {
  const SortedFrame f = testing::frame_with_incidence(2, 1, {});
  EXPECT_THROW(LatticeModel(f, {{0, as(2, {0})}}), PreconditionError);
  const LatticeModel closed(f, {{0, as(2, {0})}}, true);
  EXPECT_EQ(closed.value(0), as(2, {0, 1}));
  EXPECT_THROW(closed.value(3), UnknownNameError);
}

// Meets are intersections of extents and joins are closures of unions, on any frame.
TEST(LatticeSemantics, ExtentsAreConcepts) {
  Rng rng(5);
  for (int k = 0; k < 60; ++k) {
    const SortedFrame f = random_frame(1 + rng.below(4), 1 + rng.below(4), {}, 0.5, rng);
    const LatticeModel m = random_lattice_model(f, 2, rng);
    const LatticeFormula phi = random_lattice_formula({}, 2, 3, rng);
    const LatticeFormula psi = random_lattice_formula({}, 2, 3, rng);
    const Concept c = lattice_extent(m, phi);
    const Concept d = lattice_extent(m, psi);
    EXPECT_EQ(c.intent, galois(f, GaloisSide::Right, c.extent));
    EXPECT_EQ(c.extent, galois(f, GaloisSide::Left, c.intent));
    EXPECT_EQ(lattice_extent(m, LatticeFormula::conj(phi, psi)).extent, c.extent & d.extent);
    EXPECT_EQ(lattice_extent(m, LatticeFormula::disj(phi, psi)).extent, closure(f, Sort::One, c.extent | d.extent));
    EXPECT_EQ(lattice_extent(m, LatticeFormula::disj(phi, psi)).intent, c.intent & d.intent);
    for (std::size_t a = 0; a < f.size_a(); ++a) EXPECT_EQ(sat_lattice(m, Sort::One, a, phi), c.extent.contains(a));
    for (std::size_t b = 0; b < f.size_b(); ++b) EXPECT_EQ(sat_lattice(m, Sort::Del, b, phi), c.intent.contains(b));
  }
}

TEST(ModalSemantics, BoxedQOnF0) {
  const ModalModel m = f0_model();
  const MF boxed = parse_modal("[b] Q0", {});
  EXPECT_EQ(modal_extent(m, boxed), as(2, {0}));
  EXPECT_TRUE(sat_modal(m, 0, boxed));
  EXPECT_FALSE(sat_modal(m, 1, boxed));
  EXPECT_EQ(modal_extent(m, parse_modal("[d] P0", {})), bs(2, {1}));
  EXPECT_EQ(modal_extent(m, parse_modal("<b> Q0", {})), as(2, {0}));
  EXPECT_EQ(modal_extent(m, parse_modal("<d> P0", {})), bs(2, {1}));
  EXPECT_EQ(modal_extent(m, parse_modal("ff", {})), bs(2, {}));
}

TEST(ModalSemantics, MissingVariableIsAnError) {
  EXPECT_THROW(modal_extent(f0_model(), parse_modal("P4", {})), UnknownNameError);
}

TEST(ModalSemantics, NamedDiamondAndBox) {
  // R ⊆ A × A: a1 R a0.
  const SortedFrame f = f0({SortedRelation{"R", SortingType::parse("1;1"), {{1, 0}}}});
  ModalValuation v;
  v.p[0] = as(2, {0});
  const ModalModel m(f, v);
  const Signature s = f.signature();
  EXPECT_EQ(modal_extent(m, parse_modal("<R>(P0)", s)), as(2, {1}));
  // [R](P0) = ~<R>(~P0): a0 has no successor, a1 reaches only a0.
  EXPECT_EQ(modal_extent(m, parse_modal("[R](P0)", s)), as(2, {0, 1}));
  EXPECT_EQ(modal_extent(m, parse_modal("[R](bot)", s)), as(2, {0}));
}

// Pointwise clauses and the set-operator evaluation agree.
TEST(ModalSemantics, PointwiseMatchesExtent) {
  Signature s;
  s.add("R", SortingType::parse("1;1d"));
  s.add("S", SortingType::parse("d;d"));
  Rng rng(21);
  for (int k = 0; k < 150; ++k) {
    const SortedFrame f = random_frame(1 + rng.below(4), 1 + rng.below(4), s, 0.4, rng);
    const ModalModel m = random_modal_model(f, 2, 2, rng);
    const Sort sort = k % 2 ? Sort::One : Sort::Del;
    const MF phi = random_modal_formula(sort, s, 2, 2, 3, rng);
    const PointSet ext = modal_extent(m, phi);
    ASSERT_EQ(ext.sort(), sort);
    for (std::size_t x = 0; x < f.size(sort); ++x) EXPECT_EQ(sat_modal(m, x, phi), ext.contains(x)) << to_string(phi);
    EXPECT_EQ(modal_extent(m, expand_sugar(phi)), ext);
  }
}

TEST(FrameValidity, AxiomsOnF0) {
  const SortedFrame f = f0();
  const MF p0 = MF::var(Sort::One, 0), q0 = MF::var(Sort::Del, 0);
  EXPECT_TRUE(frame_valid_modal(f, MF::implies(p0, MF::box_b(MF::dia_d(p0)))).valid);
  EXPECT_TRUE(frame_valid_modal(f, MF::implies(q0, MF::box_d(MF::dia_b(q0)))).valid);
  EXPECT_TRUE(frame_valid_modal(f, MF::implies(MF::box_b(q0), MF::dia_b(q0))).valid);
  const ValidityResult r = frame_valid_modal(f, p0);
  EXPECT_FALSE(r.valid);
  ASSERT_TRUE(r.counter.has_value());
  EXPECT_FALSE(r.counter->valuation.p.at(0).contains(r.counter->point));
  EXPECT_EQ(frame_valid_modal(f, parse_modal("P0 -> P0", {})).valuations_checked, 4u);
}

TEST(FrameValidity, DFailsWithoutIncidence) {
  const SortedFrame f = testing::frame_with_incidence(2, 2, {});
  const MF q0 = MF::var(Sort::Del, 0);
  EXPECT_FALSE(frame_valid_modal(f, MF::implies(MF::box_b(q0), MF::dia_b(q0))).valid);
  const MF p0 = MF::var(Sort::One, 0);
  EXPECT_FALSE(frame_valid_modal(f, MF::implies(MF::box_d(p0), MF::dia_d(p0))).valid);
}

TEST(FrameValidity, ValuationCap) {
  const SortedFrame f = testing::full_incidence(6, 6);
  const MF phi = parse_modal("P0 & P1 -> P2", {});
  EXPECT_EQ(valuation_count(f, phi.variables()), std::size_t{1} << 18);
  EXPECT_THROW(frame_valid_modal(f, phi, {}, 1000), ResourceError);
}

TEST(FirstOrder, IncidenceWitness) {
  const ModalModel m = f0_model();
  const FolFormula phi = parse_fol("exd v . I(u, v)", {}, {{"u", VarSort::One}});
  EXPECT_TRUE(eval_fol(m.frame, m.valuation, {{"u", {Sort::One, 0}}}, phi));
  const FolFormula psi = parse_fol("exd v . I(u, v) & Q0(v)", {}, {{"u", VarSort::One}});
  EXPECT_TRUE(eval_fol(m.frame, m.valuation, {{"u", {Sort::One, 0}}}, psi));
  EXPECT_FALSE(eval_fol(m.frame, m.valuation, {{"u", {Sort::One, 1}}}, psi));
  EXPECT_THROW(eval_fol(m.frame, m.valuation, {}, phi), PreconditionError);
  EXPECT_THROW(eval_fol(m.frame, m.valuation, {{"u", {Sort::Del, 0}}}, phi), PreconditionError);
}

TEST(FirstOrder, SortReduction) {
  const FolFormula f = parse_fol("all1 u . P0(u)", {});
  EXPECT_EQ(to_string(sort_reduce(f)), "all u . U1(u) -> P0(u)");
  const FolFormula g = parse_fol("exd v . Q0(v)", {});
  EXPECT_EQ(to_string(sort_reduce(g)), "ex v . Ud(v) & Q0(v)");
}

TEST(FirstOrder, SortReductionPreservesTruth) {
  Signature s;
  s.add("R", SortingType::parse("d;1"));
  Rng rng(31);
  for (int k = 0; k < 100; ++k) {
    const SortedFrame f = random_frame(1 + rng.below(3), 1 + rng.below(3), s, 0.5, rng);
    const ModalModel m = random_modal_model(f, 1, 1, rng);
    const FolFormula phi = random_fol_formula(s, {}, 1, 1, 3, rng);
    EXPECT_EQ(eval_fol(f, m.valuation, {}, phi), eval_fol(f, m.valuation, {}, sort_reduce(phi))) << to_string(phi);
  }
}

TEST(FirstOrder, SortingConstraintsHold) {
  Signature s;
  s.add("R", SortingType::parse("1;1d"));
  const SortedFrame f = random_frame(3, 2, s, 0.5, 4);
  const auto constraints = sorting_constraints(s);
  EXPECT_GE(constraints.size(), 4u);
  for (const auto& c : constraints) EXPECT_TRUE(eval_fol(f, {}, {}, c)) << to_string(c);
}

}  // namespace
}  // namespace polarity
