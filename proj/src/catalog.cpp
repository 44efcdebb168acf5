#include "polarity/catalog.hpp"

#include <algorithm>

#include "polarity/error.hpp"

namespace polarity {

namespace {

FiniteLattice chain(std::size_t n) {
  std::vector<std::string> names;
  std::vector<std::pair<std::size_t, std::size_t>> order;
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back(std::to_string(i));
    if (i) order.emplace_back(i - 1, i);
  }
  return FiniteLattice(std::move(names), order);
}

bool is_chain_name(std::string_view name) { return name.size() == 2 && name[0] == 'C'; }

// Relative pseudocomplement max{z | x ∧ z ≤ y}; only residuates meet on distributive lattices.
std::size_t heyting(const FiniteLattice& l, std::size_t x, std::size_t y) {
  std::size_t best = l.bottom();
  for (std::size_t z = 0; z < l.size(); ++z)
    if (l.leq(l.meet(x, z), y)) best = l.join(best, z);
  return best;
}

}  // namespace

const std::vector<std::string>& catalog_lattice_names() {
  static const std::vector<std::string> names{"C2", "C3", "C4", "C5", "B4", "M3", "N5"};
  return names;
}

FiniteLattice catalog_lattice(std::string_view name) {
  if (is_chain_name(name) && name[1] >= '2' && name[1] <= '5') return chain(static_cast<std::size_t>(name[1] - '0'));
  if (name == "B4") return FiniteLattice({"0", "a", "b", "1"}, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  if (name == "M3") return FiniteLattice({"0", "a", "b", "c", "1"}, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}});
  // N5: 0 < a < c < 1 and 0 < b < 1.
  if (name == "N5") return FiniteLattice({"0", "a", "b", "c", "1"}, {{0, 1}, {1, 3}, {3, 4}, {0, 2}, {2, 4}});
  throw DomainError("unknown catalog lattice '" + std::string(name) + "'");
}

const std::vector<std::string>& catalog_preset_names() {
  static const std::vector<std::string> names{"modal", "implicative", "fl", "distributive"};
  return names;
}

SimilarityType catalog_preset_type(std::string_view preset) {
  auto d = [](const char* text) { return DistributionType::parse(text); };
  if (preset == "modal") return SimilarityType({d("1->1"), d("d->d")});
  if (preset == "implicative") return SimilarityType({d("1,d->d")});
  if (preset == "fl") return SimilarityType({d("1,1->1"), d("1,d->d"), d("d,1->d")});
  if (preset == "distributive") return SimilarityType({d("1,1->1"), d("d,d->d")});
  throw DomainError("unknown operator preset '" + std::string(preset) + "'");
}

Signature catalog_preset_signature(std::string_view preset) {
  Signature sig;
  const FiniteLatticeExpansion e = catalog_expansion("C2", preset);
  for (const auto& op : e.operators()) sig.add(op.name, sorting_of(op.type));
  return sig;
}

bool catalog_supports(std::string_view lattice, std::string_view preset) {
  if (preset == "distributive") return catalog_lattice(lattice).is_distributive();
  return std::find(catalog_preset_names().begin(), catalog_preset_names().end(), preset) !=
         catalog_preset_names().end();
}

FiniteLatticeExpansion catalog_expansion(std::string_view lattice_name, std::string_view preset) {
  FiniteLattice l = catalog_lattice(lattice_name);
  if (!catalog_supports(lattice_name, preset))
    throw DomainError("preset '" + std::string(preset) + "' is not available on " + std::string(lattice_name));
  const bool distributive = l.is_distributive();
  const bool is_chain = is_chain_name(lattice_name);
  const std::size_t bot = l.bottom();
  const std::size_t top = l.top();
  using Args = std::span<const std::size_t>;

  // Generic normal operators valid on every bounded lattice.
  auto fusion = [&](Args a) { return distributive ? l.meet(a[0], a[1]) : (a[0] != bot && a[1] != bot ? top : bot); };
  auto implication = [&](std::size_t x, std::size_t y) {
    return distributive ? heyting(l, x, y) : (x == bot || y == top ? top : bot);
  };

  std::vector<LatticeOperator> ops;
  if (preset == "modal") {
    // On chains (named by their rank) the predecessor map preserves joins and 0.
    ops.push_back(tabulate(l, "dia", DistributionType::parse("1->1"), [&](Args a) -> std::size_t {
      if (is_chain) return a[0] == 0 ? 0 : a[0] - 1;
      return a[0] == bot ? bot : top;
    }));
    ops.push_back(tabulate(l, "box", DistributionType::parse("d->d"), [&](Args a) -> std::size_t {
      if (is_chain) return a[0] + 1 == l.size() ? a[0] : a[0] + 1;
      return a[0] == top ? top : bot;
    }));
  } else if (preset == "implicative") {
    ops.push_back(tabulate(l, "imp", DistributionType::parse("1,d->d"), [&](Args a) { return implication(a[0], a[1]); }));
  } else if (preset == "fl") {
    ops.push_back(tabulate(l, "fus", DistributionType::parse("1,1->1"), fusion));
    ops.push_back(tabulate(l, "imp", DistributionType::parse("1,d->d"), [&](Args a) { return implication(a[0], a[1]); }));
    ops.push_back(tabulate(l, "limp", DistributionType::parse("d,1->d"), [&](Args a) { return implication(a[1], a[0]); }));
  } else {
    ops.push_back(tabulate(l, "meet", DistributionType::parse("1,1->1"), [&](Args a) { return l.meet(a[0], a[1]); }));
    ops.push_back(tabulate(l, "join", DistributionType::parse("d,d->d"), [&](Args a) { return l.join(a[0], a[1]); }));
  }
  return FiniteLatticeExpansion(std::move(l), std::move(ops));
}

std::vector<CatalogExpansion> catalog_expansions() {
  std::vector<CatalogExpansion> out;
  for (const auto& lattice : catalog_lattice_names())
    for (const auto& preset : catalog_preset_names())
      if (catalog_supports(lattice, preset)) out.push_back({lattice, preset, catalog_expansion(lattice, preset)});
  return out;
}

}  // namespace polarity
