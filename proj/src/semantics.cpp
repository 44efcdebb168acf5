#include "polarity/semantics.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <unordered_map>

#include "polarity/error.hpp"
#include "polarity/galois.hpp"

namespace polarity {

namespace {

const SortedRelation& bound_relation(const SortedFrame& frame, const std::string& name, const SortingType& sorting) {
  const SortedRelation& rel = frame.relation(name);
  if (!(rel.sorting == sorting))
    throw SortError("symbol '" + name + "' has sorting " + sorting.to_string() + " but the frame relation has " +
                    rel.sorting.to_string());
  return rel;
}

/// Visits every tuple of the product of the given sets.
template <typename F>
void for_each_product(const std::vector<std::vector<std::size_t>>& sets, F&& f) {
  for (const auto& s : sets)
    if (s.empty()) return;
  std::vector<std::size_t> pos(sets.size(), 0), tuple(sets.size());
  while (true) {
    for (std::size_t j = 0; j < sets.size(); ++j) tuple[j] = sets[j][pos[j]];
    f(std::span<const std::size_t>(tuple));
    std::size_t k = 0;
    while (k < sets.size() && ++pos[k] == sets[k].size()) pos[k++] = 0;
    if (k == sets.size()) return;
  }
}

}  // namespace

// ---- lattice language ----------------------------------------------------------

Concept lattice_extent(const LatticeModel& model, const LatticeFormula& f) {
  const SortedFrame& frame = model.frame();
  auto from_extent = [&](PointSet extent) {
    PointSet intent = galois(frame, GaloisSide::Right, extent);
    return Concept{std::move(extent), std::move(intent)};
  };
  auto from_intent = [&](PointSet intent) {
    PointSet extent = galois(frame, GaloisSide::Left, intent);
    return Concept{std::move(extent), std::move(intent)};
  };
  using K = LatticeFormula::Kind;
  switch (f.kind()) {
    case K::Var:
      return from_extent(model.value(f.index()));
    case K::Top:
      return from_extent(frame.full_set(Sort::One));
    case K::Bot:
      return from_intent(frame.full_set(Sort::Del));
    case K::And:
      return from_extent(lattice_extent(model, f.lhs()).extent & lattice_extent(model, f.rhs()).extent);
    case K::Or:
      return from_intent(lattice_extent(model, f.lhs()).intent & lattice_extent(model, f.rhs()).intent);
    case K::Op: {
      const SortedRelation& rel = bound_relation(frame, f.name(), sorting_of(f.type()));
      DualRelation dual(frame, rel.name);
      // Coordinate j ranges over ⟦φ_j⟧ when its input sort is 1, over ⦃φ_j⦄ when ∂.
      std::vector<std::vector<std::size_t>> ranges;
      for (std::size_t j = 0; j < f.args().size(); ++j) {
        Concept c = lattice_extent(model, f.args()[j]);
        ranges.push_back(f.type().inputs[j] == Sort::One ? c.extent.elements() : c.intent.elements());
      }
      PointSet acc = frame.full_set(dual.head_sort());
      for_each_product(ranges, [&](std::span<const std::size_t> u) { acc &= dual.at(u); });
      return rel.sorting.output == Sort::One ? from_intent(std::move(acc)) : from_extent(std::move(acc));
    }
  }
  throw DomainError("unknown lattice formula");
}

bool sat_lattice(const LatticeModel& model, Sort sort, std::size_t point, const LatticeFormula& f) {
  if (point >= model.frame().size(sort)) throw DomainError("point " + std::to_string(point) + " is not in the frame");
  Concept c = lattice_extent(model, f);
  return sort == Sort::One ? c.extent.contains(point) : c.intent.contains(point);
}

// ---- sorted modal language -----------------------------------------------------------

namespace {

bool sat(const ModalModel& m, std::size_t x, const ModalFormula& f) {
  using K = ModalFormula::Kind;
  const SortedFrame& fr = m.frame;
  switch (f.kind()) {
    case K::Var:
      return m.valuation.at(f.sort(), f.index()).contains(x);
    case K::Top:
      return true;
    case K::Bot:
      return false;
    case K::Not:
      return !sat(m, x, f.arg());
    case K::And:
      return sat(m, x, f.lhs()) && sat(m, x, f.rhs());
    case K::Or:
      return sat(m, x, f.lhs()) || sat(m, x, f.rhs());
    case K::Implies:
      return !sat(m, x, f.lhs()) || sat(m, x, f.rhs());
    case K::BoxB:
      for (std::size_t b = 0; b < fr.size_b(); ++b)
        if (fr.incident(x, b) && !sat(m, b, f.arg())) return false;
      return true;
    case K::BoxD:
      for (std::size_t a = 0; a < fr.size_a(); ++a)
        if (fr.incident(a, x) && !sat(m, a, f.arg())) return false;
      return true;
    case K::DiaB:
      for (std::size_t b = 0; b < fr.size_b(); ++b)
        if (fr.incident(x, b) && sat(m, b, f.arg())) return true;
      return false;
    case K::DiaD:
      for (std::size_t a = 0; a < fr.size_a(); ++a)
        if (fr.incident(a, x) && sat(m, a, f.arg())) return true;
      return false;
    case K::Diamond:
    case K::Box: {
      const SortedRelation& rel = bound_relation(fr, f.name(), f.sorting());
      const bool diamond = f.kind() == K::Diamond;
      for (const auto& t : rel.tuples) {
        if (t[0] != x) continue;
        bool all = true, any = false;
        for (std::size_t j = 0; j < f.args().size(); ++j) {
          bool s = sat(m, t[j + 1], f.args()[j]);
          all = all && s;
          any = any || s;
        }
        if (diamond && all) return true;
        if (!diamond && !any) return false;
      }
      return !diamond;
    }
  }
  throw DomainError("unknown modal formula");
}

}  // namespace

bool sat_modal(const ModalModel& model, std::size_t point, const ModalFormula& f) {
  if (point >= model.frame.size(f.sort()))
    throw DomainError("point " + std::to_string(point) + " is not in the carrier of the formula's sort");
  return sat(model, point, f);
}

PointSet modal_extent(const ModalModel& model, const ModalFormula& f) {
  using K = ModalFormula::Kind;
  const SortedFrame& fr = model.frame;
  auto sub = [&](const ModalFormula& g) { return modal_extent(model, g); };
  switch (f.kind()) {
    case K::Var:
      return model.valuation.at(f.sort(), f.index());
    case K::Top:
      return fr.full_set(f.sort());
    case K::Bot:
      return fr.empty_set(f.sort());
    case K::Not:
      return sub(f.arg()).complement();
    case K::And:
      return sub(f.lhs()) & sub(f.rhs());
    case K::Or:
      return sub(f.lhs()) | sub(f.rhs());
    case K::Implies:
      return sub(f.lhs()).complement() | sub(f.rhs());
    case K::BoxB:
      return residop(fr, ResidKind::BoxBA, sub(f.arg()));
    case K::BoxD:
      return residop(fr, ResidKind::BoxAB, sub(f.arg()));
    case K::DiaB:
      return residop(fr, ResidKind::DiaBA, sub(f.arg()));
    case K::DiaD:
      return residop(fr, ResidKind::DiaAB, sub(f.arg()));
    case K::Diamond:
    case K::Box: {
      bound_relation(fr, f.name(), f.sorting());
      const bool box = f.kind() == K::Box;
      std::vector<PointSet> args;
      for (const auto& a : f.args()) args.push_back(box ? sub(a).complement() : sub(a));
      PointSet img = image_op(fr, f.name(), args);
      return box ? img.complement() : img;
    }
  }
  throw DomainError("unknown modal formula");
}

std::size_t valuation_cap() {
  constexpr std::size_t fallback = std::size_t{1} << 20;
  const char* env = std::getenv("POLARITY_VALUATION_CAP");
  if (!env || !*env) return fallback;
  char* end = nullptr;
  unsigned long long v = std::strtoull(env, &end, 10);
  if (*end != '\0' || v == 0) return fallback;
  return static_cast<std::size_t>(v);
}

std::size_t valuation_count(const SortedFrame& frame, const std::set<std::pair<Sort, std::size_t>>& vars) {
  std::size_t bits = 0;
  for (const auto& v : vars) bits += frame.size(v.first);
  if (bits >= std::numeric_limits<std::size_t>::digits) return std::numeric_limits<std::size_t>::max();
  return std::size_t{1} << bits;
}

void for_each_valuation(const SortedFrame& frame, const std::set<std::pair<Sort, std::size_t>>& vars,
                        std::size_t cap, const std::function<bool(const ModalValuation&)>& f) {
  const std::size_t count = valuation_count(frame, vars);
  if (count > cap)
    throw ResourceError("valuation search needs " +
                        (count == std::numeric_limits<std::size_t>::max() ? std::string("more than 2^63")
                                                                          : std::to_string(count)) +
                        " valuations, above the cap of " + std::to_string(cap));
  std::vector<std::pair<Sort, std::size_t>> list(vars.begin(), vars.end());
  std::vector<std::uint64_t> masks(list.size(), 0);
  ModalValuation v;
  while (true) {
    for (std::size_t k = 0; k < list.size(); ++k) {
      auto [s, i] = list[k];
      v.of(s)[i] = PointSet::from_mask(s, frame.size(s), masks[k]);
    }
    if (!f(v)) return;
    std::size_t k = 0;
    while (k < list.size()) {
      const std::uint64_t limit = std::uint64_t{1} << frame.size(list[k].first);
      if (++masks[k] < limit) break;
      masks[k++] = 0;
    }
    if (k == list.size()) return;
  }
}

ValidityResult frame_valid_modal(const SortedFrame& frame, const ModalFormula& f,
                                 std::set<std::pair<Sort, std::size_t>> vars, std::size_t cap) {
  for (const auto& v : f.variables()) vars.insert(v);
  ValidityResult result;
  for_each_valuation(frame, vars, cap, [&](const ModalValuation& v) {
    ++result.valuations_checked;
    ModalModel m(frame, v);
    PointSet ext = modal_extent(m, f);
    if (ext.is_full()) return true;
    std::size_t point = ext.complement().elements().front();
    result.valid = false;
    result.counter = Countermodel{v, point};
    return false;
  });
  return result;
}

// ---- first-order ---------------------------------------------------------------------

namespace {

class FolEvaluator {
 public:
  FolEvaluator(const SortedFrame& frame, const ModalValuation& valuation) : frame_(frame), valuation_(valuation) {}

  bool eval(const FolFormula& f) {
    using K = FolFormula::Kind;
    switch (f.kind()) {
      case K::Eq:
        return value(f.vars()[0]) == value(f.vars()[1]);
      case K::Rel: {
        if (f.name() == "I") {
          Point u = value(f.vars()[0]), v = value(f.vars()[1]);
          return u.sort == Sort::One && v.sort == Sort::Del && frame_.incident(u.index, v.index);
        }
        const SortedRelation& rel = bound_relation(frame_, f.name(), f.sorting());
        tuple_.clear();
        for (std::size_t j = 0; j < f.vars().size(); ++j) {
          Point p = value(f.vars()[j]);
          Sort expected = j == 0 ? rel.sorting.output : rel.sorting.inputs[j - 1];
          if (p.sort != expected) return false;
          tuple_.push_back(p.index);
        }
        return frame_.holds(rel, tuple_);
      }
      case K::Pred: {
        Point p = value(f.vars()[0]);
        return p.sort == f.pred_sort() && valuation_.at(f.pred_sort(), f.index()).contains(p.index);
      }
      case K::SortPred:
        return value(f.vars()[0]).sort == f.pred_sort();
      case K::Not:
        return !eval(f.arg());
      case K::And:
        return eval(f.lhs()) && eval(f.rhs());
      case K::Or:
        return eval(f.lhs()) || eval(f.rhs());
      case K::Implies:
        return !eval(f.lhs()) || eval(f.rhs());
      case K::Forall:
      case K::Exists:
        return quantifier(f);
    }
    throw DomainError("unknown first-order formula");
  }

  void bind(const std::string& name, Point p) { env_[name] = p; }

 private:
  Point value(const FolVar& x) const {
    auto it = env_.find(x.name);
    if (it == env_.end()) throw PreconditionError("unassigned variable '" + x.name + "'");
    return it->second;
  }

  std::uint32_t code(Point p) const {
    return static_cast<std::uint32_t>(p.sort == Sort::One ? p.index : frame_.size_a() + p.index);
  }

  bool quantifier(const FolFormula& f) {
    const void* id = f.identity();
    auto fv = free_.find(id);
    if (fv == free_.end()) {
      std::vector<std::string> names;
      for (const auto& [name, sort] : f.free_variables()) names.push_back(name);
      fv = free_.emplace(id, std::move(names)).first;
    }
    std::vector<std::uint32_t> key;
    key.reserve(fv->second.size());
    for (const auto& name : fv->second) key.push_back(code(env_.at(name)));
    auto& table = memo_[id];
    if (auto hit = table.find(key); hit != table.end()) return hit->second;

    const FolVar& x = f.bound();
    const bool universal = f.kind() == FolFormula::Kind::Forall;
    std::optional<Point> saved;
    if (auto it = env_.find(x.name); it != env_.end()) saved = it->second;
    bool result = universal;
    auto range = [&](Sort s) {
      for (std::size_t i = 0; i < frame_.size(s) && result == universal; ++i) {
        env_[x.name] = Point{s, i};
        if (eval(f.body()) != universal) result = !universal;
      }
    };
    if (x.sort != VarSort::Del) range(Sort::One);
    if (x.sort != VarSort::One) range(Sort::Del);
    if (saved)
      env_[x.name] = *saved;
    else
      env_.erase(x.name);
    table.emplace(std::move(key), result);
    return result;
  }

  const SortedFrame& frame_;
  const ModalValuation& valuation_;
  std::map<std::string, Point, std::less<>> env_;
  std::vector<std::size_t> tuple_;
  std::unordered_map<const void*, std::vector<std::string>> free_;
  std::unordered_map<const void*, std::map<std::vector<std::uint32_t>, bool>> memo_;
};

}  // namespace

bool eval_fol(const SortedFrame& frame, const ModalValuation& valuation, const FolAssignment& assignment,
              const FolFormula& f) {
  FolEvaluator ev(frame, valuation);
  for (const auto& [name, sort] : f.free_variables()) {
    auto it = assignment.find(name);
    if (it == assignment.end()) throw PreconditionError("unassigned free variable '" + name + "'");
    const Point& p = it->second;
    if (sort != VarSort::Any && var_sort(p.sort) != sort)
      throw PreconditionError("variable '" + name + "' of sort " + to_string(sort) + " assigned a point of sort " +
                              std::string(1, sort_char(p.sort)));
    if (p.index >= frame.size(p.sort)) throw DomainError("variable '" + name + "' assigned a point outside the frame");
  }
  for (const auto& [name, p] : assignment) ev.bind(name, p);
  return ev.eval(f);
}

FolFormula sort_reduce(const FolFormula& f) {
  using K = FolFormula::Kind;
  auto any = [](const FolVar& x) { return FolVar{x.name, VarSort::Any}; };
  std::vector<FolVar> vars;
  for (const auto& x : f.vars()) vars.push_back(any(x));
  switch (f.kind()) {
    case K::Eq:
      return FolFormula::eq(vars[0], vars[1]);
    case K::Rel:
      return f.name() == "I" ? FolFormula::incidence(vars[0], vars[1]) : FolFormula::rel(f.name(), f.sorting(), vars);
    case K::Pred:
      return FolFormula::pred(f.pred_sort(), f.index(), vars[0]);
    case K::SortPred:
      return FolFormula::sort_pred(f.pred_sort(), vars[0]);
    case K::Not:
      return FolFormula::negation(sort_reduce(f.arg()));
    case K::And:
      return FolFormula::conj(sort_reduce(f.lhs()), sort_reduce(f.rhs()));
    case K::Or:
      return FolFormula::disj(sort_reduce(f.lhs()), sort_reduce(f.rhs()));
    case K::Implies:
      return FolFormula::implies(sort_reduce(f.lhs()), sort_reduce(f.rhs()));
    case K::Forall:
    case K::Exists: {
      const FolVar& x = f.bound();
      FolFormula body = sort_reduce(f.body());
      const bool universal = f.kind() == K::Forall;
      if (x.sort != VarSort::Any) {
        FolFormula guard = FolFormula::sort_pred(x.sort == VarSort::One ? Sort::One : Sort::Del, vars[0]);
        body = universal ? FolFormula::implies(guard, body) : FolFormula::conj(guard, body);
      }
      return universal ? FolFormula::forall(vars[0], body) : FolFormula::exists(vars[0], body);
    }
  }
  throw DomainError("unknown first-order formula");
}

std::vector<FolFormula> sorting_constraints(const Signature& signature) {
  std::vector<FolFormula> out;
  auto var = [](std::size_t i) { return FolVar{"x" + std::to_string(i), VarSort::Any}; };
  auto typing = [&](const std::string& name, const SortingType& sorting) {
    std::vector<FolVar> vars;
    std::vector<FolFormula> guards;
    for (std::size_t r = 0; r <= sorting.arity(); ++r) {
      vars.push_back(var(r));
      guards.push_back(FolFormula::sort_pred(r == 0 ? sorting.output : sorting.inputs[r - 1], vars.back()));
    }
    FolFormula body = FolFormula::implies(FolFormula::rel(name, sorting, vars), FolFormula::conj_all(guards, vars[0]));
    for (std::size_t r = vars.size(); r-- > 0;) body = FolFormula::forall(vars[r], body);
    out.push_back(body);
  };
  typing("I", SortingType{Sort::One, {Sort::Del}});
  for (const auto& [name, sorting] : signature.relations()) typing(name, sorting);

  const FolVar x = var(1), y = var(2);
  auto both = [&](Sort s) { return FolFormula::conj(FolFormula::sort_pred(s, x), FolFormula::sort_pred(s, y)); };
  out.push_back(FolFormula::forall(
      x, FolFormula::forall(y, FolFormula::implies(FolFormula::eq(x, y),
                                                   FolFormula::disj(both(Sort::One), both(Sort::Del))))));
  out.push_back(FolFormula::forall(
      x, FolFormula::disj(FolFormula::sort_pred(Sort::One, x), FolFormula::sort_pred(Sort::Del, x))));
  return out;
}

}  // namespace polarity
