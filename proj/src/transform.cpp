#include "polarity/transform.hpp"

#include "polarity/error.hpp"
#include "polarity/galois.hpp"

namespace polarity {

namespace {

using MF = ModalFormula;

const ModalFormula& assigned(const TranslationAssignment& asg, std::size_t i) {
  auto it = asg.find(i);
  if (it == asg.end()) throw UnknownNameError("assignment has no entry for p" + std::to_string(i));
  if (it->second.sort() != Sort::Del) throw SortError("assignment entry for p" + std::to_string(i) + " is not of sort d");
  return it->second;
}

MF op_diamond(const LatticeFormula& f, const TranslationAssignment& asg) {
  std::vector<MF> args;
  for (std::size_t j = 0; j < f.args().size(); ++j)
    args.push_back(translate(f.type().inputs[j] == Sort::One ? TranslationMode::Bullet : TranslationMode::Circle,
                             f.args()[j], asg));
  return MF::diamond(f.name(), sorting_of(f.type()), std::move(args));
}

MF bullet(const LatticeFormula& f, const TranslationAssignment& asg);
MF circle(const LatticeFormula& f, const TranslationAssignment& asg);

MF bullet(const LatticeFormula& f, const TranslationAssignment& asg) {
  using K = LatticeFormula::Kind;
  switch (f.kind()) {
    case K::Var:
      return MF::box_b(assigned(asg, f.index()));
    case K::Top:
      return MF::top(Sort::One);
    case K::Bot:
      return MF::box_b(MF::bot(Sort::Del));
    case K::And:
      return MF::conj(bullet(f.lhs(), asg), bullet(f.rhs(), asg));
    case K::Or:
      return MF::box_b(MF::disj(MF::dia_d(bullet(f.lhs(), asg)), MF::dia_d(bullet(f.rhs(), asg))));
    case K::Op:
      if (f.type().output == Sort::One) return MF::box_b(MF::dia_d(op_diamond(f, asg)));
      return MF::box_b(MF::negation(circle(f, asg)));
  }
  throw DomainError("unknown lattice formula");
}

MF circle(const LatticeFormula& f, const TranslationAssignment& asg) {
  using K = LatticeFormula::Kind;
  switch (f.kind()) {
    case K::Var:
      return MF::box_d(MF::dia_b(MF::negation(assigned(asg, f.index()))));
    case K::Top:
      return MF::box_d(MF::bot(Sort::One));
    case K::Bot:
      return MF::top(Sort::Del);
    case K::And:
      return MF::box_d(MF::disj(MF::dia_b(circle(f.lhs(), asg)), MF::dia_b(circle(f.rhs(), asg))));
    case K::Or:
      return MF::conj(circle(f.lhs(), asg), circle(f.rhs(), asg));
    case K::Op:
      if (f.type().output == Sort::One) return MF::box_d(MF::negation(bullet(f, asg)));
      return MF::box_d(MF::dia_b(op_diamond(f, asg)));
  }
  throw DomainError("unknown lattice formula");
}

}  // namespace

ModalFormula translate(TranslationMode mode, const LatticeFormula& f, const TranslationAssignment& asg) {
  return mode == TranslationMode::Bullet ? bullet(f, asg) : circle(f, asg);
}

LatticeModel induced_model(const ModalModel& model, const TranslationAssignment& asg) {
  std::map<std::size_t, PointSet> v;
  for (const auto& [i, beta] : asg) {
    if (beta.sort() != Sort::Del) throw SortError("assignment entry for p" + std::to_string(i) + " is not of sort d");
    v.emplace(i, residop(model.frame, ResidKind::BoxBA, modal_extent(model, beta)));
  }
  return LatticeModel(model.frame, std::move(v));
}

bool TranslationReport::holds() const {
  for (const auto& c : checks)
    if (!c.holds) return false;
  return true;
}

std::vector<std::string> TranslationReport::failures() const {
  std::vector<std::string> out;
  for (const auto& c : checks)
    if (!c.holds) out.push_back(c.name);
  return out;
}

TranslationReport verify_translation_theorem(const ModalModel& model, const TranslationAssignment& asg,
                                             const LatticeFormula& phi, const LatticeFormula& psi) {
  TranslationReport report;
  LatticeModel n = induced_model(model, asg);
  auto ext = [&](const MF& f) { return modal_extent(model, f); };
  auto chains = [&](const LatticeFormula& f, const std::string& label) {
    Concept c = lattice_extent(n, f);
    MF tb = translate(TranslationMode::Bullet, f, asg);
    MF tc = translate(TranslationMode::Circle, f, asg);
    PointSet e1 = ext(tb), e2 = ext(MF::box_b(MF::negation(tc))), e3 = ext(MF::box_b(MF::dia_d(tb)));
    report.checks.push_back({"extent " + label + ": extent = [[T*]]", c.extent == e1});
    report.checks.push_back({"extent " + label + ": [[T*]] = [[[b]~T o]]", e1 == e2});
    report.checks.push_back({"extent " + label + ": [[[b]~T o]] = [[[b]<d>T*]]", e2 == e3});
    PointSet i1 = ext(tc), i2 = ext(MF::box_d(MF::negation(tb))), i3 = ext(MF::box_d(MF::dia_b(tc)));
    report.checks.push_back({"intent " + label + ": intent = {{T o}}", c.intent == i1});
    report.checks.push_back({"intent " + label + ": {{T o}} = {{[d]~T*}}", i1 == i2});
    report.checks.push_back({"intent " + label + ": {{[d]~T*}} = {{[d]<b>T o}}", i2 == i3});
    return std::pair{c, std::pair{e1, i1}};
  };
  auto [cphi, tphi] = chains(phi, "phi");
  auto [cpsi, tpsi] = chains(psi, "psi");
  const bool lattice_side = cphi.extent.subset_of(cpsi.extent);
  const bool bullet_side = tphi.first.subset_of(tpsi.first);
  const bool circle_side = tpsi.second.subset_of(tphi.second);
  report.checks.push_back({"entailment: [[phi]] <= [[psi]] iff [[T*phi]] <= [[T*psi]]", lattice_side == bullet_side});
  report.checks.push_back({"entailment: [[T*phi]] <= [[T*psi]] iff {{T o psi}} <= {{T o phi}}", bullet_side == circle_side});
  return report;
}

bool model_entails(const ModalModel& model, const ModalFormula& lhs, const ModalFormula& rhs) {
  if (lhs.sort() != rhs.sort()) throw SortError("entailment between formulas of different sorts");
  return modal_extent(model, lhs).subset_of(modal_extent(model, rhs));
}

bool frame_entails(const SortedFrame& frame, const ModalFormula& lhs, const ModalFormula& rhs, std::size_t cap) {
  if (lhs.sort() != rhs.sort()) throw SortError("entailment between formulas of different sorts");
  auto vars = lhs.variables();
  for (const auto& v : rhs.variables()) vars.insert(v);
  bool holds = true;
  for_each_valuation(frame, vars, cap, [&](const ModalValuation& v) {
    ModalModel m(frame, v);
    if (modal_extent(m, lhs).is_full() && !modal_extent(m, rhs).is_full()) holds = false;
    return holds;
  });
  return holds;
}

// ---- standard translation -------------------------------------------------------------

namespace {

class StandardTranslator {
 public:
  explicit StandardTranslator(std::string reserved) : reserved_(std::move(reserved)) {}

  FolFormula run(const ModalFormula& f, const FolVar& x) {
    using K = ModalFormula::Kind;
    using F = FolFormula;
    switch (f.kind()) {
      case K::Var:
        return F::pred(f.sort(), f.index(), x);
      case K::Top:
        return F::eq(x, x);
      case K::Bot:
        return F::negation(F::eq(x, x));
      case K::Not:
        return F::negation(run(f.arg(), x));
      case K::And:
        return F::conj(run(f.lhs(), x), run(f.rhs(), x));
      case K::Or:
        return F::disj(run(f.lhs(), x), run(f.rhs(), x));
      case K::Implies:
        return F::implies(run(f.lhs(), x), run(f.rhs(), x));
      case K::BoxB: {
        FolVar v = fresh(Sort::Del);
        return F::forall(v, F::implies(F::incidence(x, v), run(f.arg(), v)));
      }
      case K::BoxD: {
        FolVar u = fresh(Sort::One);
        return F::forall(u, F::implies(F::incidence(u, x), run(f.arg(), u)));
      }
      case K::DiaB: {
        FolVar v = fresh(Sort::Del);
        return F::exists(v, F::conj(F::incidence(x, v), run(f.arg(), v)));
      }
      case K::DiaD: {
        FolVar u = fresh(Sort::One);
        return F::exists(u, F::conj(F::incidence(u, x), run(f.arg(), u)));
      }
      case K::Diamond:
      case K::Box: {
        std::vector<FolVar> vars{x};
        for (Sort s : f.sorting().inputs) vars.push_back(fresh(s));
        std::vector<FolFormula> parts;
        for (std::size_t j = 0; j < f.args().size(); ++j) parts.push_back(run(f.args()[j], vars[j + 1]));
        FolFormula atom = F::rel(f.name(), f.sorting(), vars);
        FolFormula body = atom;
        if (f.kind() == K::Diamond) {
          body = F::conj(atom, F::conj_all(parts, x));
        } else {
          FolFormula any = parts[0];
          for (std::size_t j = 1; j < parts.size(); ++j) any = F::disj(any, parts[j]);
          body = F::implies(atom, any);
        }
        for (std::size_t j = vars.size(); j-- > 1;)
          body = f.kind() == K::Diamond ? F::exists(vars[j], body) : F::forall(vars[j], body);
        return body;
      }
    }
    throw DomainError("unknown modal formula");
  }

 private:
  FolVar fresh(Sort s) {
    std::string name;
    do name = (s == Sort::One ? "u" : "v") + std::to_string(++counter_);
    while (name == reserved_);
    return FolVar{name, var_sort(s)};
  }

  std::string reserved_;
  std::size_t counter_ = 0;
};

std::string fresh_name(const std::string& base, const std::set<std::string>& avoid) {
  if (!avoid.count(base)) return base;
  for (std::size_t k = 1;; ++k) {
    std::string name = base + "_" + std::to_string(k);
    if (!avoid.count(name)) return name;
  }
}

void collect_names(const FolFormula& f, std::set<std::string>& out) {
  for (const auto& x : f.vars()) out.insert(x.name);
  for (const auto& a : f.args()) collect_names(a, out);
}

struct StabilityParts {
  FolVar u, v, z;
  FolFormula shifted;
};

StabilityParts stability_parts(const FolFormula& f, const std::string& u) {
  auto free = f.free_variables();
  if (free.size() != 1 || !free.count(u))
    throw PreconditionError("stability transform needs exactly one free variable '" + u + "'");
  if (free.at(u) != VarSort::One) throw PreconditionError("free variable '" + u + "' must have sort 1");
  std::set<std::string> names;
  collect_names(f, names);
  FolVar v{fresh_name("v", names), VarSort::Del};
  names.insert(v.name);
  FolVar z{fresh_name("z", names), VarSort::One};
  return {FolVar{u, VarSort::One}, v, z, substitute(f, u, z)};
}

}  // namespace

FolFormula standard_translation(const ModalFormula& f, const FolVar& x) {
  if (x.sort != var_sort(f.sort()))
    throw SortError("standard translation variable '" + x.name + "' does not have the formula's sort");
  return StandardTranslator(x.name).run(f, x);
}

FolFormula stability_transform(const FolFormula& f, const std::string& u) {
  auto [uu, v, z, shifted] = stability_parts(f, u);
  return FolFormula::forall(
      v, FolFormula::implies(FolFormula::incidence(uu, v),
                             FolFormula::exists(z, FolFormula::conj(FolFormula::incidence(z, v), shifted))));
}

FolFormula stability_transform_prenex(const FolFormula& f, const std::string& u) {
  auto [uu, v, z, shifted] = stability_parts(f, u);
  return FolFormula::forall(
      v, FolFormula::exists(z, FolFormula::implies(FolFormula::incidence(uu, v),
                                                   FolFormula::conj(FolFormula::incidence(z, v), shifted))));
}

StabilityResult is_stable_fol(const FolFormula& f, const std::string& u, std::span<const ModalModel> family) {
  FolFormula t = stability_transform(f, u);
  for (std::size_t m = 0; m < family.size(); ++m) {
    const ModalModel& model = family[m];
    for (std::size_t a = 0; a < model.frame.size_a(); ++a) {
      FolAssignment asg{{u, Point{Sort::One, a}}};
      bool original = eval_fol(model.frame, model.valuation, asg, f);
      if (original != eval_fol(model.frame, model.valuation, asg, t))
        return StabilityResult{false, StabilityWitness{m, a, original}};
    }
  }
  return {};
}

ModalStabilityResult is_stable_modal(const ModalFormula& alpha, std::span<const SortedFrame> frames,
                                     std::set<std::pair<Sort, std::size_t>> vars, std::size_t cap) {
  if (alpha.sort() != Sort::One) throw SortError("stability is defined for formulas of sort 1");
  for (const auto& v : alpha.variables()) vars.insert(v);
  const ModalFormula closed = MF::box_b(MF::dia_d(alpha));
  ModalStabilityResult result;
  for (std::size_t i = 0; i < frames.size() && result.stable; ++i) {
    for_each_valuation(frames[i], vars, cap, [&](const ModalValuation& v) {
      ModalModel m(frames[i], v);
      PointSet lhs = modal_extent(m, alpha), rhs = modal_extent(m, closed);
      if (lhs == rhs) return true;
      result.stable = false;
      result.frame = i;
      PointSet diff = (lhs - rhs) | (rhs - lhs);
      result.counter = Countermodel{v, diff.elements().front()};
      return false;
    });
  }
  return result;
}

std::pair<LatticeFormula, TranslationAssignment> translation_preimage(const ModalFormula& boxed) {
  if (boxed.kind() != ModalFormula::Kind::BoxB) throw PreconditionError("translation preimage needs a formula [b] beta");
  return {LatticeFormula::var(0), TranslationAssignment{{0, boxed.arg()}}};
}

}  // namespace polarity
