#include <algorithm>
#include <functional>

#include "polarity/error.hpp"
#include "polarity/fol_formula.hpp"
#include "polarity/lattice_formula.hpp"
#include "polarity/modal_formula.hpp"

namespace polarity {

// ---- lattice ------------------------------------------------------------------

LatticeFormula LatticeFormula::var(std::size_t index) {
  return LatticeFormula(std::make_shared<const Node>(Node{Kind::Var, index, {}, {}, {}}));
}
LatticeFormula LatticeFormula::top() { return LatticeFormula(std::make_shared<const Node>(Node{Kind::Top})); }
LatticeFormula LatticeFormula::bot() { return LatticeFormula(std::make_shared<const Node>(Node{Kind::Bot})); }
LatticeFormula LatticeFormula::conj(LatticeFormula lhs, LatticeFormula rhs) {
  return LatticeFormula(std::make_shared<const Node>(Node{Kind::And, 0, {}, {}, {std::move(lhs), std::move(rhs)}}));
}
LatticeFormula LatticeFormula::disj(LatticeFormula lhs, LatticeFormula rhs) {
  return LatticeFormula(std::make_shared<const Node>(Node{Kind::Or, 0, {}, {}, {std::move(lhs), std::move(rhs)}}));
}
LatticeFormula LatticeFormula::op(std::string name, DistributionType type, std::vector<LatticeFormula> args) {
  if (args.size() != type.arity())
    throw SortError("operator '" + name + "' of type " + type.to_string() + " expects " +
                    std::to_string(type.arity()) + " arguments, got " + std::to_string(args.size()));
  return LatticeFormula(
      std::make_shared<const Node>(Node{Kind::Op, 0, std::move(name), std::move(type), std::move(args)}));
}

std::size_t LatticeFormula::depth() const {
  std::size_t d = 0;
  for (const auto& a : args()) d = std::max(d, a.depth() + 1);
  return d;
}

std::size_t LatticeFormula::size() const {
  std::size_t n = 1;
  for (const auto& a : args()) n += a.size();
  return n;
}

std::set<std::size_t> LatticeFormula::variables() const {
  std::set<std::size_t> out;
  std::function<void(const LatticeFormula&)> walk = [&](const LatticeFormula& f) {
    if (f.kind() == Kind::Var) out.insert(f.index());
    for (const auto& a : f.args()) walk(a);
  };
  walk(*this);
  return out;
}

bool operator==(const LatticeFormula& a, const LatticeFormula& b) {
  if (a.node_ == b.node_) return true;
  return a.kind() == b.kind() && a.index() == b.index() && a.name() == b.name() && a.type() == b.type() &&
         a.args() == b.args();
}

// ---- modal --------------------------------------------------------------------

namespace {

std::string sort_label(Sort s) { return s == Sort::One ? "1" : "d"; }

void require_sort(const ModalFormula& f, Sort expected, const char* where) {
  if (f.sort() != expected)
    throw SortError(std::string(where) + " expects a formula of sort " + sort_label(expected) + ", got sort " +
                    sort_label(f.sort()));
}

}  // namespace

ModalFormula ModalFormula::make(Node node) { return ModalFormula(std::make_shared<const Node>(std::move(node))); }

ModalFormula ModalFormula::var(Sort sort, std::size_t index) { return make({Kind::Var, sort, index, {}, {}, {}}); }
ModalFormula ModalFormula::top(Sort sort) { return make({Kind::Top, sort}); }
ModalFormula ModalFormula::bot(Sort sort) { return make({Kind::Bot, sort}); }

ModalFormula ModalFormula::negation(ModalFormula arg) {
  Sort s = arg.sort();
  return make({Kind::Not, s, 0, {}, {}, {std::move(arg)}});
}

ModalFormula ModalFormula::conj(ModalFormula lhs, ModalFormula rhs) {
  require_sort(rhs, lhs.sort(), "'&'");
  Sort s = lhs.sort();
  return make({Kind::And, s, 0, {}, {}, {std::move(lhs), std::move(rhs)}});
}
ModalFormula ModalFormula::disj(ModalFormula lhs, ModalFormula rhs) {
  require_sort(rhs, lhs.sort(), "'|'");
  Sort s = lhs.sort();
  return make({Kind::Or, s, 0, {}, {}, {std::move(lhs), std::move(rhs)}});
}
ModalFormula ModalFormula::implies(ModalFormula lhs, ModalFormula rhs) {
  require_sort(rhs, lhs.sort(), "'->'");
  Sort s = lhs.sort();
  return make({Kind::Implies, s, 0, {}, {}, {std::move(lhs), std::move(rhs)}});
}

ModalFormula ModalFormula::box_b(ModalFormula beta) {
  require_sort(beta, Sort::Del, "[b]");
  return make({Kind::BoxB, Sort::One, 0, {}, {}, {std::move(beta)}});
}
ModalFormula ModalFormula::box_d(ModalFormula alpha) {
  require_sort(alpha, Sort::One, "[d]");
  return make({Kind::BoxD, Sort::Del, 0, {}, {}, {std::move(alpha)}});
}
ModalFormula ModalFormula::dia_b(ModalFormula beta) {
  require_sort(beta, Sort::Del, "<b>");
  return make({Kind::DiaB, Sort::One, 0, {}, {}, {std::move(beta)}});
}
ModalFormula ModalFormula::dia_d(ModalFormula alpha) {
  require_sort(alpha, Sort::One, "<d>");
  return make({Kind::DiaD, Sort::Del, 0, {}, {}, {std::move(alpha)}});
}

namespace {

void check_polyadic(const std::string& name, const SortingType& sorting, const std::vector<ModalFormula>& args) {
  if (args.size() != sorting.arity())
    throw SortError("'" + name + "' of sorting " + sorting.to_string() + " expects " +
                    std::to_string(sorting.arity()) + " arguments, got " + std::to_string(args.size()));
  for (std::size_t j = 0; j < args.size(); ++j)
    if (args[j].sort() != sorting.inputs[j])
      throw SortError("argument " + std::to_string(j + 1) + " of '" + name + "' must have sort " +
                      sort_label(sorting.inputs[j]));
}

}  // namespace

ModalFormula ModalFormula::diamond(std::string name, SortingType sorting, std::vector<ModalFormula> args) {
  check_polyadic(name, sorting, args);
  Sort s = sorting.output;
  return make({Kind::Diamond, s, 0, std::move(name), std::move(sorting), std::move(args)});
}
ModalFormula ModalFormula::box(std::string name, SortingType sorting, std::vector<ModalFormula> args) {
  check_polyadic(name, sorting, args);
  Sort s = sorting.output;
  return make({Kind::Box, s, 0, std::move(name), std::move(sorting), std::move(args)});
}

ModalFormula ModalFormula::left_perp(ModalFormula beta) { return box_b(negation(std::move(beta))); }
ModalFormula ModalFormula::right_perp(ModalFormula alpha) { return box_d(negation(std::move(alpha))); }

std::size_t ModalFormula::modal_depth() const {
  std::size_t d = 0;
  for (const auto& a : args()) d = std::max(d, a.modal_depth());
  switch (kind()) {
    case Kind::BoxB:
    case Kind::BoxD:
    case Kind::DiaB:
    case Kind::DiaD:
    case Kind::Diamond:
    case Kind::Box:
      return d + 1;
    default:
      return d;
  }
}

std::size_t ModalFormula::size() const {
  std::size_t n = 1;
  for (const auto& a : args()) n += a.size();
  return n;
}

std::set<std::pair<Sort, std::size_t>> ModalFormula::variables() const {
  std::set<std::pair<Sort, std::size_t>> out;
  std::function<void(const ModalFormula&)> walk = [&](const ModalFormula& f) {
    if (f.kind() == Kind::Var) out.emplace(f.sort(), f.index());
    for (const auto& a : f.args()) walk(a);
  };
  walk(*this);
  return out;
}

bool operator==(const ModalFormula& a, const ModalFormula& b) {
  if (a.node_ == b.node_) return true;
  return a.kind() == b.kind() && a.sort() == b.sort() && a.index() == b.index() && a.name() == b.name() &&
         a.sorting() == b.sorting() && a.args() == b.args();
}

ModalFormula expand_sugar(const ModalFormula& f) {
  using K = ModalFormula::Kind;
  std::vector<ModalFormula> args;
  for (const auto& a : f.args()) args.push_back(expand_sugar(a));
  switch (f.kind()) {
    case K::Var:
    case K::Top:
    case K::Bot:
      return f;
    case K::Not:
      return ModalFormula::negation(args[0]);
    case K::And:
      return ModalFormula::conj(args[0], args[1]);
    case K::Or:
      return ModalFormula::negation(
          ModalFormula::conj(ModalFormula::negation(args[0]), ModalFormula::negation(args[1])));
    case K::Implies:
      return ModalFormula::implies(args[0], args[1]);
    case K::BoxB:
      return ModalFormula::box_b(args[0]);
    case K::BoxD:
      return ModalFormula::box_d(args[0]);
    case K::DiaB:
      return ModalFormula::negation(ModalFormula::box_b(ModalFormula::negation(args[0])));
    case K::DiaD:
      return ModalFormula::negation(ModalFormula::box_d(ModalFormula::negation(args[0])));
    case K::Diamond:
      return ModalFormula::diamond(f.name(), f.sorting(), args);
    case K::Box: {
      for (auto& a : args) a = ModalFormula::negation(a);
      return ModalFormula::negation(ModalFormula::diamond(f.name(), f.sorting(), args));
    }
  }
  return f;
}

// ---- first-order --------------------------------------------------------------

namespace {

std::string var_sort_label(VarSort s) {
  switch (s) {
    case VarSort::One:
      return "1";
    case VarSort::Del:
      return "d";
    case VarSort::Any:
      return "unsorted";
  }
  return "?";
}

void require_var_sort(const FolVar& x, Sort expected, const std::string& where) {
  if (x.sort != VarSort::Any && x.sort != var_sort(expected))
    throw SortError("variable '" + x.name + "' of sort " + var_sort_label(x.sort) + " used where " + where +
                    " expects sort " + sort_label(expected));
}

}  // namespace

FolFormula FolFormula::make(Node node) { return FolFormula(std::make_shared<const Node>(std::move(node))); }

FolFormula FolFormula::eq(FolVar lhs, FolVar rhs) {
  if (lhs.sort != VarSort::Any && rhs.sort != VarSort::Any && lhs.sort != rhs.sort)
    throw SortError("equality between '" + lhs.name + "' and '" + rhs.name + "' of different sorts");
  Node n{Kind::Eq};
  n.vars = {std::move(lhs), std::move(rhs)};
  return make(std::move(n));
}

FolFormula FolFormula::incidence(FolVar u, FolVar v) {
  require_var_sort(u, Sort::One, "I");
  require_var_sort(v, Sort::Del, "I");
  Node n{Kind::Rel, "I", SortingType{Sort::One, {Sort::Del}}};
  n.vars = {std::move(u), std::move(v)};
  return make(std::move(n));
}

FolFormula FolFormula::rel(std::string name, SortingType sorting, std::vector<FolVar> vars) {
  if (name == "I") {
    if (vars.size() != 2) throw SortError("I takes 2 arguments");
    return incidence(vars[0], vars[1]);
  }
  if (vars.size() != sorting.arity() + 1)
    throw SortError("relation '" + name + "' of sorting " + sorting.to_string() + " takes " +
                    std::to_string(sorting.arity() + 1) + " arguments, got " + std::to_string(vars.size()));
  require_var_sort(vars[0], sorting.output, name);
  for (std::size_t j = 0; j < sorting.arity(); ++j) require_var_sort(vars[j + 1], sorting.inputs[j], name);
  Node n{Kind::Rel, std::move(name), std::move(sorting)};
  n.vars = std::move(vars);
  return make(std::move(n));
}

FolFormula FolFormula::pred(Sort sort, std::size_t index, FolVar x) {
  require_var_sort(x, sort, std::string(sort == Sort::One ? "P" : "Q") + std::to_string(index));
  Node n{Kind::Pred};
  n.pred_sort = sort;
  n.index = index;
  n.vars = {std::move(x)};
  return make(std::move(n));
}

FolFormula FolFormula::sort_pred(Sort sort, FolVar x) {
  Node n{Kind::SortPred};
  n.pred_sort = sort;
  n.vars = {std::move(x)};
  return make(std::move(n));
}

FolFormula FolFormula::negation(FolFormula arg) {
  Node n{Kind::Not};
  n.args = {std::move(arg)};
  return make(std::move(n));
}
FolFormula FolFormula::conj(FolFormula lhs, FolFormula rhs) {
  Node n{Kind::And};
  n.args = {std::move(lhs), std::move(rhs)};
  return make(std::move(n));
}
FolFormula FolFormula::disj(FolFormula lhs, FolFormula rhs) {
  Node n{Kind::Or};
  n.args = {std::move(lhs), std::move(rhs)};
  return make(std::move(n));
}
FolFormula FolFormula::implies(FolFormula lhs, FolFormula rhs) {
  Node n{Kind::Implies};
  n.args = {std::move(lhs), std::move(rhs)};
  return make(std::move(n));
}
FolFormula FolFormula::forall(FolVar x, FolFormula body) {
  Node n{Kind::Forall};
  n.vars = {std::move(x)};
  n.args = {std::move(body)};
  return make(std::move(n));
}
FolFormula FolFormula::exists(FolVar x, FolFormula body) {
  Node n{Kind::Exists};
  n.vars = {std::move(x)};
  n.args = {std::move(body)};
  return make(std::move(n));
}

FolFormula FolFormula::conj_all(const std::vector<FolFormula>& parts, const FolVar& fallback) {
  if (parts.empty()) return eq(fallback, fallback);
  FolFormula out = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) out = conj(out, parts[i]);
  return out;
}

std::map<std::string, VarSort> FolFormula::free_variables() const {
  std::map<std::string, VarSort> out;
  std::vector<std::string> bound;
  std::function<void(const FolFormula&)> walk = [&](const FolFormula& f) {
    if (f.kind() == Kind::Forall || f.kind() == Kind::Exists) {
      bound.push_back(f.bound().name);
      walk(f.body());
      bound.pop_back();
      return;
    }
    for (const auto& x : f.vars())
      if (std::find(bound.begin(), bound.end(), x.name) == bound.end()) out.emplace(x.name, x.sort);
    for (const auto& a : f.args()) walk(a);
  };
  walk(*this);
  return out;
}

std::size_t FolFormula::size() const {
  std::size_t n = 1;
  for (const auto& a : args()) n += a.size();
  return n;
}

bool operator==(const FolFormula& a, const FolFormula& b) {
  if (a.node_ == b.node_) return true;
  return a.kind() == b.kind() && a.name() == b.name() && a.sorting() == b.sorting() &&
         a.pred_sort() == b.pred_sort() && a.index() == b.index() && a.vars() == b.vars() && a.args() == b.args();
}

namespace {

FolFormula rebuild(const FolFormula& f, std::vector<FolVar> vars, std::vector<FolFormula> args) {
  using K = FolFormula::Kind;
  switch (f.kind()) {
    case K::Eq:
      return FolFormula::eq(vars[0], vars[1]);
    case K::Rel:
      return FolFormula::rel(f.name(), f.sorting(), std::move(vars));
    case K::Pred:
      return FolFormula::pred(f.pred_sort(), f.index(), vars[0]);
    case K::SortPred:
      return FolFormula::sort_pred(f.pred_sort(), vars[0]);
    case K::Not:
      return FolFormula::negation(args[0]);
    case K::And:
      return FolFormula::conj(args[0], args[1]);
    case K::Or:
      return FolFormula::disj(args[0], args[1]);
    case K::Implies:
      return FolFormula::implies(args[0], args[1]);
    case K::Forall:
      return FolFormula::forall(vars[0], args[0]);
    case K::Exists:
      return FolFormula::exists(vars[0], args[0]);
  }
  return f;
}

}  // namespace

FolFormula substitute(const FolFormula& f, const std::string& from, const FolVar& to) {
  using K = FolFormula::Kind;
  if (f.kind() == K::Forall || f.kind() == K::Exists) {
    const FolVar& x = f.bound();
    if (x.name == from) return f;
    auto body_free = f.body().free_variables();
    if (x.name == to.name && body_free.count(from)) {
      std::string fresh = x.name;
      for (std::size_t k = 1;; ++k) {
        fresh = x.name + "_" + std::to_string(k);
        if (fresh != to.name && fresh != from && !body_free.count(fresh)) break;
      }
      FolVar renamed{fresh, x.sort};
      FolFormula body = substitute(substitute(f.body(), x.name, renamed), from, to);
      return rebuild(f, {renamed}, {body});
    }
    return rebuild(f, {x}, {substitute(f.body(), from, to)});
  }
  std::vector<FolVar> vars = f.vars();
  for (auto& v : vars)
    if (v.name == from) v = to;
  std::vector<FolFormula> args;
  for (const auto& a : f.args()) args.push_back(substitute(a, from, to));
  return rebuild(f, std::move(vars), std::move(args));
}

}  // namespace polarity
