#include "polarity/bisim.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>

#include "polarity/error.hpp"

namespace polarity {

SortedPairRelation SortedPairRelation::inverse() const {
  SortedPairRelation out;
  for (auto [x, y] : pairs_a) out.pairs_a.emplace(y, x);
  for (auto [x, y] : pairs_b) out.pairs_b.emplace(y, x);
  return out;
}

SortedPairRelation SortedPairRelation::identity(const SortedFrame& frame) {
  SortedPairRelation out;
  for (std::size_t a = 0; a < frame.size_a(); ++a) out.pairs_a.emplace(a, a);
  for (std::size_t b = 0; b < frame.size_b(); ++b) out.pairs_b.emplace(b, b);
  return out;
}

SortedPairRelation operator|(const SortedPairRelation& x, const SortedPairRelation& y) {
  SortedPairRelation out = x;
  out.pairs_a.insert(y.pairs_a.begin(), y.pairs_a.end());
  out.pairs_b.insert(y.pairs_b.begin(), y.pairs_b.end());
  return out;
}

std::string SimulationViolation::describe(const SortedFrame& from, const SortedFrame& to) const {
  std::string out = "pair (" + from.name(sort, pair.first) + ", " + to.name(sort, pair.second) + "): ";
  switch (clause) {
    case SimClause::Incidence:
      out += "I-neighbour " + from.name(opposite(sort), witness.at(0)) + " has no related match";
      break;
    case SimClause::Relation: {
      const auto& sorting = from.relation(symbol).sorting;
      out += symbol + "-tuple (";
      for (std::size_t j = 0; j < witness.size(); ++j)
        out += (j ? " " : "") + from.name(sorting.inputs[j], witness[j]);
      out += ") has no related match";
      break;
    }
    case SimClause::Valuation:
      out += "disagree on " + symbol;
      break;
  }
  return out;
}

namespace {

using Related = std::function<bool(Sort, std::size_t, std::size_t)>;

void check_compatible(const SortedFrame& from, const SortedFrame& to) {
  if (!(from.signature() == to.signature())) throw SortError("frames have different relation signatures");
}

void check_well_sorted(const SortedFrame& from, const SortedFrame& to, const SortedPairRelation& rel) {
  for (Sort s : {Sort::One, Sort::Del})
    for (auto [x, y] : rel.pairs(s))
      if (x >= from.size(s) || y >= to.size(s)) throw SortError("pair relation is not well-sorted");
}

const PointSet& neighbours(const SortedFrame& f, Sort s, std::size_t x) {
  return s == Sort::One ? f.incidence_row(x) : f.incidence_column(x);
}

/// The forth clauses for one related pair (x, y) of sort s.
std::optional<SimulationViolation> check_pair(const SortedFrame& from, const SortedFrame& to, Sort s, std::size_t x,
                                              std::size_t y, const Related& related) {
  const Sort other = opposite(s);
  const PointSet& mine = neighbours(from, s, x);
  const PointSet& theirs = neighbours(to, s, y);
  std::optional<SimulationViolation> out;
  mine.for_each([&](std::size_t w) {
    if (out) return;
    bool matched = false;
    theirs.for_each([&](std::size_t w2) { matched = matched || related(other, w, w2); });
    if (!matched) out = SimulationViolation{SimClause::Incidence, s, {x, y}, "", {w}};
  });
  if (out) return out;

  for (const auto& rel : from.relations()) {
    if (rel.sorting.output != s) continue;
    const SortedRelation& rel2 = to.relation(rel.name);
    auto first2 = std::lower_bound(rel2.tuples.begin(), rel2.tuples.end(), Tuple{y});
    auto first = std::lower_bound(rel.tuples.begin(), rel.tuples.end(), Tuple{x});
    for (auto t = first; t != rel.tuples.end() && (*t)[0] == x; ++t) {
      bool matched = false;
      for (auto t2 = first2; !matched && t2 != rel2.tuples.end() && (*t2)[0] == y; ++t2) {
        bool all = true;
        for (std::size_t j = 0; all && j < rel.arity(); ++j) all = related(rel.sorting.inputs[j], (*t)[j + 1], (*t2)[j + 1]);
        matched = all;
      }
      if (!matched) return SimulationViolation{SimClause::Relation, s, {x, y}, rel.name, Tuple(t->begin() + 1, t->end())};
    }
  }
  return std::nullopt;
}

std::optional<SimulationViolation> valuation_violation(const ModalModel& m, const ModalModel& n, Sort s,
                                                       std::size_t x, std::size_t y) {
  std::set<std::size_t> vars;
  for (const auto& [i, set] : m.valuation.of(s)) vars.insert(i);
  for (const auto& [i, set] : n.valuation.of(s)) vars.insert(i);
  for (std::size_t i : vars) {
    bool in_m = m.valuation.get_or_empty(s, i, m.frame.size(s)).contains(x);
    bool in_n = n.valuation.get_or_empty(s, i, n.frame.size(s)).contains(y);
    if (in_m != in_n)
      return SimulationViolation{SimClause::Valuation, s, {x, y}, (s == Sort::One ? "P" : "Q") + std::to_string(i), {}};
  }
  return std::nullopt;
}

}  // namespace

std::optional<SimulationViolation> find_simulation_violation(const SortedFrame& from, const SortedFrame& to,
                                                             const SortedPairRelation& rel) {
  check_compatible(from, to);
  check_well_sorted(from, to, rel);
  Related related = [&](Sort s, std::size_t x, std::size_t y) { return rel.contains(s, x, y); };
  for (Sort s : {Sort::One, Sort::Del})
    for (auto [x, y] : rel.pairs(s))
      if (auto v = check_pair(from, to, s, x, y, related)) return v;
  return std::nullopt;
}

bool is_simulation(const SortedFrame& from, const SortedFrame& to, const SortedPairRelation& rel) {
  return !find_simulation_violation(from, to, rel);
}

bool is_bisimulation(const SortedFrame& from, const SortedFrame& to, const SortedPairRelation& rel) {
  return is_simulation(from, to, rel) && is_simulation(to, from, rel.inverse());
}

std::optional<SimulationViolation> find_model_bisimulation_violation(const ModalModel& m, const ModalModel& n,
                                                                     const SortedPairRelation& rel) {
  if (auto v = find_simulation_violation(m.frame, n.frame, rel)) return v;
  if (auto v = find_simulation_violation(n.frame, m.frame, rel.inverse())) {
    std::swap(v->pair.first, v->pair.second);
    return v;
  }
  for (Sort s : {Sort::One, Sort::Del})
    for (auto [x, y] : rel.pairs(s))
      if (auto v = valuation_violation(m, n, s, x, y)) return v;
  return std::nullopt;
}

bool is_model_bisimulation(const ModalModel& m, const ModalModel& n, const SortedPairRelation& rel) {
  return !find_model_bisimulation_violation(m, n, rel);
}

SortedPairRelation largest_bisimulation(const ModalModel& m, const ModalModel& n) {
  check_compatible(m.frame, n.frame);
  // z[s][x * |n_s| + y]: pair (x, y) of sort s is still a candidate.
  std::vector<char> z[2];
  auto idx = [](Sort s) { return s == Sort::One ? 0 : 1; };
  for (Sort s : {Sort::One, Sort::Del}) {
    z[idx(s)].assign(m.frame.size(s) * n.frame.size(s), 0);
    for (std::size_t x = 0; x < m.frame.size(s); ++x)
      for (std::size_t y = 0; y < n.frame.size(s); ++y)
        z[idx(s)][x * n.frame.size(s) + y] = !valuation_violation(m, n, s, x, y);
  }
  Related forth = [&](Sort s, std::size_t x, std::size_t y) { return z[idx(s)][x * n.frame.size(s) + y] != 0; };
  Related back = [&](Sort s, std::size_t y, std::size_t x) { return z[idx(s)][x * n.frame.size(s) + y] != 0; };
  for (bool changed = true; changed;) {
    changed = false;
    for (Sort s : {Sort::One, Sort::Del})
      for (std::size_t x = 0; x < m.frame.size(s); ++x)
        for (std::size_t y = 0; y < n.frame.size(s); ++y) {
          char& cell = z[idx(s)][x * n.frame.size(s) + y];
          if (!cell) continue;
          if (check_pair(m.frame, n.frame, s, x, y, forth) || check_pair(n.frame, m.frame, s, y, x, back)) {
            cell = 0;
            changed = true;
          }
        }
  }
  SortedPairRelation out;
  for (Sort s : {Sort::One, Sort::Del})
    for (std::size_t x = 0; x < m.frame.size(s); ++x)
      for (std::size_t y = 0; y < n.frame.size(s); ++y)
        if (z[idx(s)][x * n.frame.size(s) + y]) out.pairs(s).emplace(x, y);
  return out;
}

// ---- bounded modal equivalence ----------------------------------------------------------

namespace {

/// Disjoint union of two models; right-hand points are shifted past the left-hand ones.
ModalModel disjoint_union(const ModalModel& m, const ModalModel& n) {
  check_compatible(m.frame, n.frame);
  const SortedFrame& f = m.frame;
  const SortedFrame& g = n.frame;
  auto shift = [&](Sort s, std::size_t i) { return f.size(s) + i; };
  std::vector<std::string> names[2];
  for (Sort s : {Sort::One, Sort::Del}) {
    auto& out = names[s == Sort::One ? 0 : 1];
    for (const auto& x : f.names(s)) out.push_back("l_" + x);
    for (const auto& x : g.names(s)) out.push_back("r_" + x);
  }
  auto incidence = f.incidence_pairs();
  for (auto [a, b] : g.incidence_pairs()) incidence.emplace_back(shift(Sort::One, a), shift(Sort::Del, b));
  std::vector<SortedRelation> relations;
  for (const auto& rel : f.relations()) {
    SortedRelation u = rel;
    for (auto t : g.relation(rel.name).tuples) {
      t[0] = shift(rel.sorting.output, t[0]);
      for (std::size_t j = 0; j < rel.arity(); ++j) t[j + 1] = shift(rel.sorting.inputs[j], t[j + 1]);
      u.tuples.push_back(std::move(t));
    }
    relations.push_back(std::move(u));
  }
  SortedFrame frame(std::move(names[0]), std::move(names[1]), std::move(incidence), std::move(relations));
  ModalValuation v;
  for (Sort s : {Sort::One, Sort::Del}) {
    std::set<std::size_t> vars;
    for (const auto& [i, set] : m.valuation.of(s)) vars.insert(i);
    for (const auto& [i, set] : n.valuation.of(s)) vars.insert(i);
    for (std::size_t i : vars) {
      PointSet set(s, frame.size(s));
      m.valuation.get_or_empty(s, i, f.size(s)).for_each([&](std::size_t x) { set.insert(x); });
      n.valuation.get_or_empty(s, i, g.size(s)).for_each([&](std::size_t x) { set.insert(shift(s, x)); });
      v.of(s).emplace(i, std::move(set));
    }
  }
  return ModalModel(std::move(frame), std::move(v));
}

class Refinement {
 public:
  explicit Refinement(const ModalModel& model) : model_(model) {
    std::vector<int> level[2];
    for (Sort s : {Sort::One, Sort::Del}) {
      std::map<std::vector<int>, int> ids;
      for (std::size_t x = 0; x < frame().size(s); ++x) {
        std::vector<int> key;
        for (const auto& [i, set] : model_.valuation.of(s)) key.push_back(set.contains(x) ? 1 : 0);
        level[slot(s)].push_back(ids.emplace(key, static_cast<int>(ids.size())).first->second);
      }
    }
    levels_.push_back({level[0], level[1]});
  }

  /// Class of x at level k (levels past stabilisation repeat the last one).
  int cls(std::size_t k, Sort s, std::size_t x) {
    ensure(k);
    return levels_[std::min(k, levels_.size() - 1)][slot(s)][x];
  }

  bool equivalent(std::size_t k, Sort s, std::size_t x, std::size_t y) { return cls(k, s, x) == cls(k, s, y); }

  /// A formula satisfied at x and refuted at y, of modal depth ≤ the first level
  /// separating them (which must be ≤ k).
  ModalFormula distinguish(std::size_t k, Sort s, std::size_t x, std::size_t y) {
    std::size_t l = 0;
    while (equivalent(l, s, x, y)) ++l;
    if (l > k) throw DomainError("points are not separated at the requested level");
    if (l == 0) {
      for (const auto& [i, set] : model_.valuation.of(s)) {
        if (set.contains(x) == set.contains(y)) continue;
        ModalFormula v = ModalFormula::var(s, i);
        return set.contains(x) ? v : ModalFormula::negation(v);
      }
    }
    const std::size_t below = l - 1;
    const Sort other = opposite(s);
    const PointSet& nx = neighbours(frame(), s, x);
    const PointSet& ny = neighbours(frame(), s, y);
    auto unmatched = [&](const PointSet& from, const PointSet& to) -> std::optional<std::size_t> {
      for (std::size_t w : from.elements()) {
        bool matched = false;
        to.for_each([&](std::size_t w2) { matched = matched || equivalent(below, other, w, w2); });
        if (!matched) return w;
      }
      return std::nullopt;
    };
    if (auto w = unmatched(nx, ny)) {
      std::vector<ModalFormula> parts;
      ny.for_each([&](std::size_t w2) { parts.push_back(distinguish(below, other, *w, w2)); });
      ModalFormula body = fold(parts, true, other);
      return s == Sort::One ? ModalFormula::dia_b(body) : ModalFormula::dia_d(body);
    }
    if (auto w2 = unmatched(ny, nx)) {
      std::vector<ModalFormula> parts;
      nx.for_each([&](std::size_t w) { parts.push_back(distinguish(below, other, w, *w2)); });
      ModalFormula body = fold(parts, false, other);
      return s == Sort::One ? ModalFormula::box_b(body) : ModalFormula::box_d(body);
    }
    for (const auto& rel : frame().relations()) {
      if (rel.sorting.output != s) continue;
      if (auto f = relation_formula(rel, below, x, y)) return *f;
      if (auto f = relation_formula(rel, below, y, x)) return ModalFormula::negation(*f);
    }
    throw DomainError("refinement inconsistency: no separating clause found");
  }

 private:
  static int slot(Sort s) { return s == Sort::One ? 0 : 1; }
  const SortedFrame& frame() const { return model_.frame; }

  static const PointSet& neighbours(const SortedFrame& f, Sort s, std::size_t x) {
    return s == Sort::One ? f.incidence_row(x) : f.incidence_column(x);
  }

  static ModalFormula fold(std::vector<ModalFormula> parts, bool conjunction, Sort s) {
    std::vector<ModalFormula> unique;
    for (auto& p : parts)
      if (std::find(unique.begin(), unique.end(), p) == unique.end()) unique.push_back(std::move(p));
    if (unique.empty()) return conjunction ? ModalFormula::top(s) : ModalFormula::bot(s);
    ModalFormula out = unique[0];
    for (std::size_t i = 1; i < unique.size(); ++i)
      out = conjunction ? ModalFormula::conj(out, unique[i]) : ModalFormula::disj(out, unique[i]);
    return out;
  }

  static std::vector<const Tuple*> tuples_at(const SortedRelation& rel, std::size_t head) {
    std::vector<const Tuple*> out;
    for (auto t = std::lower_bound(rel.tuples.begin(), rel.tuples.end(), Tuple{head});
         t != rel.tuples.end() && (*t)[0] == head; ++t)
      out.push_back(&*t);
    return out;
  }

  /// <R>(ψ̄) true at x and false at y, when some R-tuple of x has no level-`below`
  /// match among the R-tuples of y.
  std::optional<ModalFormula> relation_formula(const SortedRelation& rel, std::size_t below, std::size_t x,
                                               std::size_t y) {
    const auto& in = rel.sorting.inputs;
    auto mine = tuples_at(rel, x);
    auto theirs = tuples_at(rel, y);
    for (const Tuple* t : mine) {
      std::vector<std::vector<ModalFormula>> parts(in.size());
      bool matched = false;
      for (const Tuple* t2 : theirs) {
        std::size_t j = 0;
        while (j < in.size() && equivalent(below, in[j], (*t)[j + 1], (*t2)[j + 1])) ++j;
        if (j == in.size()) {
          matched = true;
          break;
        }
        parts[j].push_back(distinguish(below, in[j], (*t)[j + 1], (*t2)[j + 1]));
      }
      if (matched) continue;
      std::vector<ModalFormula> args;
      for (std::size_t j = 0; j < in.size(); ++j) args.push_back(fold(parts[j], true, in[j]));
      return ModalFormula::diamond(rel.name, rel.sorting, std::move(args));
    }
    return std::nullopt;
  }

  void ensure(std::size_t k) {
    while (levels_.size() <= k && !stable_) {
      const auto& prev = levels_.back();
      std::array<std::vector<int>, 2> next;
      std::size_t before = 0, after = 0;
      for (Sort s : {Sort::One, Sort::Del}) {
        std::map<std::vector<int>, int> ids;
        for (std::size_t x = 0; x < frame().size(s); ++x) {
          std::vector<int> key{prev[slot(s)][x], -1};
          std::set<int> ns;
          neighbours(frame(), s, x).for_each([&](std::size_t w) { ns.insert(prev[slot(opposite(s))][w]); });
          key.insert(key.end(), ns.begin(), ns.end());
          for (const auto& rel : frame().relations()) {
            if (rel.sorting.output != s) continue;
            std::set<std::vector<int>> shapes;
            for (const Tuple* t : tuples_at(rel, x)) {
              std::vector<int> shape;
              for (std::size_t j = 0; j < rel.arity(); ++j) shape.push_back(prev[slot(rel.sorting.inputs[j])][(*t)[j + 1]]);
              shapes.insert(shape);
            }
            key.push_back(-2);
            for (const auto& sh : shapes) {
              key.insert(key.end(), sh.begin(), sh.end());
              key.push_back(-3);
            }
          }
          next[slot(s)].push_back(ids.emplace(key, static_cast<int>(ids.size())).first->second);
        }
        before += std::set<int>(prev[slot(s)].begin(), prev[slot(s)].end()).size();
        after += ids.size();
      }
      if (after == before) {
        stable_ = true;
        return;
      }
      levels_.push_back(std::move(next));
    }
  }

  const ModalModel& model_;
  std::vector<std::array<std::vector<int>, 2>> levels_;
  bool stable_ = false;
};

}  // namespace

EquivalenceResult modal_equiv(const ModalModel& m, Sort sort, std::size_t x, const ModalModel& n, std::size_t y,
                              std::size_t depth) {
  if (x >= m.frame.size(sort) || y >= n.frame.size(sort)) throw DomainError("modal_equiv: point out of range");
  ModalModel u = disjoint_union(m, n);
  Refinement r(u);
  const std::size_t yy = m.frame.size(sort) + y;
  if (r.equivalent(depth, sort, x, yy)) return {};
  return EquivalenceResult{false, r.distinguish(depth, sort, x, yy)};
}

std::size_t equivalence_depth_bound(const ModalModel& m, const ModalModel& n) {
  const std::size_t points = m.frame.size_a() + m.frame.size_b() + n.frame.size_a() + n.frame.size_b();
  return points - 2;
}

}  // namespace polarity
