#include "polarity/generators.hpp"

#include <set>

#include "polarity/catalog.hpp"

namespace polarity {

namespace {

std::vector<std::pair<std::string, SortingType>> relations_with_output(const Signature& sig, Sort output) {
  std::vector<std::pair<std::string, SortingType>> out;
  for (const auto& [name, sorting] : sig.relations())
    if (sorting.output == output) out.emplace_back(name, sorting);
  return out;
}

ModalFormula modal_leaf(Sort sort, std::size_t p_vars, std::size_t q_vars, Rng& rng) {
  const std::size_t vars = sort == Sort::One ? p_vars : q_vars;
  if (vars == 0 || rng.chance(0.1)) return rng.chance(0.5) ? ModalFormula::top(sort) : ModalFormula::bot(sort);
  return ModalFormula::var(sort, rng.below(vars));
}

struct FolGen {
  const Signature& sig;
  std::size_t p_vars, q_vars;
  Rng& rng;
  std::set<std::string> taken;
  std::size_t fresh = 0;

  std::string fresh_name() {
    std::string name;
    do name = "x" + std::to_string(fresh++);
    while (taken.count(name));
    return name;
  }

  static std::vector<FolVar> of_sort(const std::vector<FolVar>& scope, VarSort s) {
    std::vector<FolVar> out;
    for (const auto& v : scope)
      if (v.sort == s) out.push_back(v);
    return out;
  }

  FolVar pick(const std::vector<FolVar>& pool) { return pool[rng.below(pool.size())]; }

  FolFormula quantified(std::vector<FolVar> scope, std::size_t depth) {
    FolVar x{fresh_name(), rng.chance(0.5) ? VarSort::One : VarSort::Del};
    scope.push_back(x);
    FolFormula body = formula(scope, depth);
    return rng.chance(0.5) ? FolFormula::forall(x, body) : FolFormula::exists(x, body);
  }

  FolFormula atom(const std::vector<FolVar>& scope) {
    auto ones = of_sort(scope, VarSort::One);
    auto dels = of_sort(scope, VarSort::Del);
    std::vector<int> options;
    if (!ones.empty()) options.push_back(0);
    if (!dels.empty()) options.push_back(1);
    if (!ones.empty() && !dels.empty()) options.push_back(2);
    if (!scope.empty()) options.push_back(3);
    std::vector<std::pair<std::string, SortingType>> rels;
    for (const auto& [name, sorting] : sig.relations()) {
      bool ok = !(sorting.output == Sort::One ? ones : dels).empty();
      for (Sort s : sorting.inputs) ok = ok && !(s == Sort::One ? ones : dels).empty();
      if (ok) rels.emplace_back(name, sorting);
    }
    if (!rels.empty()) options.push_back(4);
    if (options.empty()) return quantified(scope, 0);
    switch (options[rng.below(options.size())]) {
      case 0:
        if (p_vars == 0) return FolFormula::eq(pick(ones), pick(ones));
        return FolFormula::pred(Sort::One, rng.below(p_vars), pick(ones));
      case 1:
        if (q_vars == 0) return FolFormula::eq(pick(dels), pick(dels));
        return FolFormula::pred(Sort::Del, rng.below(q_vars), pick(dels));
      case 2:
        return FolFormula::incidence(pick(ones), pick(dels));
      case 3: {
        FolVar x = pick(scope);
        auto same = of_sort(scope, x.sort);
        return FolFormula::eq(x, pick(same));
      }
      default: {
        const auto& [name, sorting] = rels[rng.below(rels.size())];
        std::vector<FolVar> vars{pick(sorting.output == Sort::One ? ones : dels)};
        for (Sort s : sorting.inputs) vars.push_back(pick(s == Sort::One ? ones : dels));
        return FolFormula::rel(name, sorting, std::move(vars));
      }
    }
  }

  FolFormula formula(const std::vector<FolVar>& scope, std::size_t depth) {
    if (depth == 0 || rng.chance(0.2)) return atom(scope);
    switch (rng.below(6)) {
      case 0:
        return FolFormula::negation(formula(scope, depth - 1));
      case 1:
        return FolFormula::conj(formula(scope, depth - 1), formula(scope, depth - 1));
      case 2:
        return FolFormula::disj(formula(scope, depth - 1), formula(scope, depth - 1));
      case 3:
        return FolFormula::implies(formula(scope, depth - 1), formula(scope, depth - 1));
      default:
        return quantified(scope, depth - 1);
    }
  }
};

}  // namespace

LatticeFormula random_lattice_formula(const Signature& signature, std::size_t vars, std::size_t depth, Rng& rng) {
  if (depth == 0 || rng.chance(0.25)) {
    if (vars == 0 || rng.chance(0.1)) return rng.chance(0.5) ? LatticeFormula::top() : LatticeFormula::bot();
    return LatticeFormula::var(rng.below(vars));
  }
  const auto& rels = signature.relations();
  const std::size_t choice = rng.below(rels.empty() ? 2 : 4);
  if (choice == 0)
    return LatticeFormula::conj(random_lattice_formula(signature, vars, depth - 1, rng),
                                random_lattice_formula(signature, vars, depth - 1, rng));
  if (choice == 1)
    return LatticeFormula::disj(random_lattice_formula(signature, vars, depth - 1, rng),
                                random_lattice_formula(signature, vars, depth - 1, rng));
  auto it = rels.begin();
  std::advance(it, static_cast<std::ptrdiff_t>(rng.below(rels.size())));
  std::vector<LatticeFormula> args;
  for (std::size_t j = 0; j < it->second.arity(); ++j)
    args.push_back(random_lattice_formula(signature, vars, depth - 1, rng));
  return LatticeFormula::op(it->first, distribution_of(it->second), std::move(args));
}

ModalFormula random_modal_formula(Sort sort, const Signature& signature, std::size_t p_vars, std::size_t q_vars,
                                  std::size_t depth, Rng& rng) {
  if (rng.chance(0.2)) return modal_leaf(sort, p_vars, q_vars, rng);
  auto same = [&](std::size_t d) { return random_modal_formula(sort, signature, p_vars, q_vars, d, rng); };
  auto other = [&](std::size_t d) { return random_modal_formula(opposite(sort), signature, p_vars, q_vars, d, rng); };
  const auto rels = relations_with_output(signature, sort);
  const std::size_t kinds = depth == 0 ? 4 : (rels.empty() ? 6 : 8);
  switch (rng.below(kinds)) {
    case 0:
      return depth == 0 ? modal_leaf(sort, p_vars, q_vars, rng) : ModalFormula::negation(same(depth));
    case 1:
      return ModalFormula::conj(same(depth == 0 ? 0 : depth - 1), same(depth == 0 ? 0 : depth - 1));
    case 2:
      return rng.chance(0.5) ? ModalFormula::disj(same(depth == 0 ? 0 : depth - 1), same(depth == 0 ? 0 : depth - 1))
                             : ModalFormula::implies(same(depth == 0 ? 0 : depth - 1), same(depth == 0 ? 0 : depth - 1));
    case 3:
      return depth == 0 ? ModalFormula::negation(modal_leaf(sort, p_vars, q_vars, rng)) : ModalFormula::negation(same(depth - 1));
    case 4:
      return sort == Sort::One ? ModalFormula::box_b(other(depth - 1)) : ModalFormula::box_d(other(depth - 1));
    case 5:
      return sort == Sort::One ? ModalFormula::dia_b(other(depth - 1)) : ModalFormula::dia_d(other(depth - 1));
    default: {
      const auto& [name, sorting] = rels[rng.below(rels.size())];
      std::vector<ModalFormula> args;
      for (Sort s : sorting.inputs) args.push_back(random_modal_formula(s, signature, p_vars, q_vars, depth - 1, rng));
      return rng.chance(0.7) ? ModalFormula::diamond(name, sorting, std::move(args))
                             : ModalFormula::box(name, sorting, std::move(args));
    }
  }
}

TranslationAssignment random_assignment(const Signature& signature, std::size_t vars, std::size_t p_vars,
                                        std::size_t q_vars, std::size_t depth, Rng& rng) {
  TranslationAssignment asg;
  // Half the entries are bare variables: boolean combinations over few variables are
  // mostly constant, and constant valuations make every lattice join a union.
  for (std::size_t i = 0; i < vars; ++i)
    asg.emplace(i, q_vars > 0 && rng.chance(0.5) ? ModalFormula::var(Sort::Del, rng.below(q_vars))
                                                  : random_modal_formula(Sort::Del, signature, p_vars, q_vars, depth, rng));
  return asg;
}

FolFormula random_fol_formula(const Signature& signature, const std::vector<FolVar>& scope, std::size_t p_vars,
                              std::size_t q_vars, std::size_t depth, Rng& rng) {
  FolGen gen{signature, p_vars, q_vars, rng, {}};
  for (const auto& v : scope) gen.taken.insert(v.name);
  return gen.formula(scope, depth);
}

Signature random_preset_signature(Rng& rng) {
  const auto& presets = catalog_preset_names();
  return catalog_preset_signature(presets[rng.below(presets.size())]);
}

}  // namespace polarity
