#include "polarity/lattice.hpp"

#include <algorithm>
#include <numeric>

#include "polarity/error.hpp"
#include "polarity/galois.hpp"

namespace polarity {

FiniteLattice::FiniteLattice(std::vector<std::string> elements,
                             const std::vector<std::pair<std::size_t, std::size_t>>& leq_pairs)
    : names_(std::move(elements)) {
  const std::size_t n = names_.size();
  if (n == 0) throw DomainError("a lattice needs at least one element");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (names_[i] == names_[j]) throw DomainError("duplicate lattice element '" + names_[i] + "'");

  leq_.assign(n * n, false);
  for (std::size_t x = 0; x < n; ++x) leq_[x * n + x] = true;
  for (auto [x, y] : leq_pairs) {
    if (x >= n || y >= n) throw DomainError("order pair refers to an unknown element");
    leq_[x * n + y] = true;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (leq_[i * n + k])
        for (std::size_t j = 0; j < n; ++j)
          if (leq_[k * n + j]) leq_[i * n + j] = true;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y)
      if (leq_[x * n + y] && leq_[y * n + x])
        throw DomainError("order is not antisymmetric: '" + names_[x] + "' and '" + names_[y] + "'");

  auto bound = [&](std::size_t x, std::size_t y, bool lower) -> std::size_t {
    std::vector<std::size_t> bounds;
    for (std::size_t z = 0; z < n; ++z)
      if (lower ? (leq(z, x) && leq(z, y)) : (leq(x, z) && leq(y, z))) bounds.push_back(z);
    for (std::size_t c : bounds)
      if (std::all_of(bounds.begin(), bounds.end(), [&](std::size_t z) { return lower ? leq(z, c) : leq(c, z); }))
        return c;
    throw DomainError("not a lattice: '" + names_[x] + "' and '" + names_[y] + "' have no " +
                      (lower ? "meet" : "join"));
  };
  meet_.resize(n * n);
  join_.resize(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      meet_[x * n + y] = bound(x, y, true);
      join_[x * n + y] = bound(x, y, false);
    }
  bottom_ = 0;
  top_ = 0;
  for (std::size_t x = 1; x < n; ++x) {
    bottom_ = meet(bottom_, x);
    top_ = join(top_, x);
  }
}

std::optional<std::size_t> FiniteLattice::find(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

std::size_t FiniteLattice::index_of(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw DomainError("unknown lattice element '" + std::string(name) + "'");
}

std::vector<std::pair<std::size_t, std::size_t>> FiniteLattice::order_pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t x = 0; x < size(); ++x)
    for (std::size_t y = 0; y < size(); ++y)
      if (x != y && leq(x, y)) out.emplace_back(x, y);
  return out;
}

bool FiniteLattice::is_distributive() const {
  for (std::size_t x = 0; x < size(); ++x)
    for (std::size_t y = 0; y < size(); ++y)
      for (std::size_t z = 0; z < size(); ++z)
        if (meet(x, join(y, z)) != join(meet(x, y), meet(x, z))) return false;
  return true;
}

std::size_t LatticeOperator::apply(std::span<const std::size_t> args, std::size_t lattice_size) const {
  if (args.size() != type.arity())
    throw SortError("operator '" + name + "' expects " + std::to_string(type.arity()) + " arguments");
  std::size_t idx = 0;
  std::size_t stride = 1;
  for (auto a : args) {
    if (a >= lattice_size) throw DomainError("operator '" + name + "' applied outside the carrier");
    idx += a * stride;
    stride *= lattice_size;
  }
  return table.at(idx);
}

void check_normal(const FiniteLattice& lattice, const LatticeOperator& op) {
  const std::size_t n = op.type.arity();
  const std::size_t size = lattice.size();
  if (n == 0) throw NormalityError("operator '" + op.name + "' has no arguments");
  std::size_t total = 1;
  for (std::size_t j = 0; j < n; ++j) total *= size;
  if (op.table.size() != total)
    throw NormalityError("operator '" + op.name + "' table has " + std::to_string(op.table.size()) + " entries, expected " +
                         std::to_string(total));
  for (auto v : op.table)
    if (v >= size) throw NormalityError("operator '" + op.name + "' takes a value outside the carrier");

  auto sorted_join = [&](Sort s, std::size_t x, std::size_t y) {
    return s == Sort::One ? lattice.join(x, y) : lattice.meet(x, y);
  };
  auto sorted_bottom = [&](Sort s) { return s == Sort::One ? lattice.bottom() : lattice.top(); };
  auto describe = [&](const std::vector<std::size_t>& args) {
    std::string out = "(";
    for (std::size_t j = 0; j < args.size(); ++j) out += (j ? ", " : "") + lattice.name(args[j]);
    return out + ")";
  };

  const Sort out = op.type.output;
  std::vector<std::size_t> args(n, 0);
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::size_t rest = idx;
    for (std::size_t j = 0; j < n; ++j) {
      args[j] = rest % size;
      rest /= size;
    }
    for (std::size_t j = 0; j < n; ++j) {
      const Sort in = op.type.inputs[j];
      auto probe = args;
      probe[j] = sorted_bottom(in);
      if (op.apply(probe, size) != sorted_bottom(out))
        throw NormalityError("operator '" + op.name + "' does not preserve the bound in coordinate " +
                             std::to_string(j + 1) + " at " + describe(probe));
      for (std::size_t y = 0; y < size; ++y) {
        auto left = args;
        auto right = args;
        right[j] = y;
        auto joined = args;
        joined[j] = sorted_join(in, args[j], y);
        if (op.apply(joined, size) != sorted_join(out, op.apply(left, size), op.apply(right, size)))
          throw NormalityError("operator '" + op.name + "' does not distribute over joins in coordinate " +
                               std::to_string(j + 1) + " at " + describe(left) + " and " + describe(right));
      }
    }
  }
}

FiniteLatticeExpansion::FiniteLatticeExpansion(FiniteLattice lattice, std::vector<LatticeOperator> operators)
    : lattice_(std::move(lattice)), operators_(std::move(operators)) {
  Signature names;
  for (const auto& op : operators_) {
    names.add(op.name, sorting_of(op.type));
    check_normal(lattice_, op);
  }
}

const LatticeOperator& FiniteLatticeExpansion::op(std::string_view name) const {
  for (const auto& o : operators_)
    if (o.name == name) return o;
  throw UnknownNameError("expansion has no operator '" + std::string(name) + "'");
}

std::optional<std::size_t> ConceptLattice::find_extent(const PointSet& extent) const {
  for (std::size_t i = 0; i < concepts.size(); ++i)
    if (concepts[i].extent == extent) return i;
  return std::nullopt;
}

ConceptLattice all_concepts(const SortedFrame& frame) {
  const std::size_t n = frame.size_a();
  auto close = [&](const PointSet& s) { return closure(frame, Sort::One, s); };
  auto prefix = [&](const PointSet& s, std::size_t i) {
    PointSet out = s;
    for (std::size_t k = i; k < n; ++k) out.erase(k);
    return out;
  };

  std::vector<PointSet> extents;
  PointSet current = close(frame.empty_set(Sort::One));
  extents.push_back(current);
  while (!current.is_full()) {
    bool advanced = false;
    for (std::size_t i = n; i-- > 0;) {
      if (current.contains(i)) continue;
      PointSet seed = prefix(current, i);
      seed.insert(i);
      PointSet next = close(seed);
      if (prefix(next, i) == prefix(current, i)) {
        current = next;
        advanced = true;
        break;
      }
    }
    if (!advanced) break;
    extents.push_back(current);
  }

  ConceptLattice result;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < extents.size(); ++i) {
    result.concepts.push_back(Concept{extents[i], galois(frame, GaloisSide::Right, extents[i])});
    names.push_back("c" + std::to_string(i));
  }
  std::vector<std::pair<std::size_t, std::size_t>> order;
  for (std::size_t i = 0; i < extents.size(); ++i)
    for (std::size_t j = 0; j < extents.size(); ++j)
      if (i != j && extents[i].subset_of(extents[j])) order.emplace_back(i, j);
  result.lattice = FiniteLattice(std::move(names), order);
  return result;
}

SortedFrame canonical_frame(const FiniteLatticeExpansion& expansion) {
  const auto& lat = expansion.lattice();
  const std::size_t n = lat.size();
  std::vector<std::string> a_names;
  std::vector<std::string> b_names;
  for (std::size_t x = 0; x < n; ++x) {
    a_names.push_back("f_" + lat.name(x));
    b_names.push_back("i_" + lat.name(x));
  }
  std::vector<std::pair<std::size_t, std::size_t>> incidence;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (!lat.leq(x, y)) incidence.emplace_back(x, y);

  std::vector<SortedRelation> relations;
  for (const auto& op : expansion.operators()) {
    SortedRelation rel{op.name, sorting_of(op.type), {}};
    const std::size_t arity = op.type.arity();
    std::size_t total = op.table.size();
    std::vector<std::size_t> args(arity);
    for (std::size_t idx = 0; idx < total; ++idx) {
      std::size_t rest = idx;
      for (std::size_t j = 0; j < arity; ++j) {
        args[j] = rest % n;
        rest /= n;
      }
      const std::size_t value = op.table[idx];
      for (std::size_t u = 0; u < n; ++u) {
        bool related = op.type.output == Sort::One ? lat.leq(u, value) : lat.leq(value, u);
        if (!related) continue;
        Tuple t{u};
        t.insert(t.end(), args.begin(), args.end());
        rel.tuples.push_back(std::move(t));
      }
    }
    relations.push_back(std::move(rel));
  }
  return SortedFrame(std::move(a_names), std::move(b_names), std::move(incidence), std::move(relations));
}

PointSet principal_downset(const FiniteLattice& lattice, std::size_t x) {
  PointSet s(Sort::One, lattice.size());
  for (std::size_t y = 0; y < lattice.size(); ++y)
    if (lattice.leq(y, x)) s.insert(y);
  return s;
}

PointSet principal_upset(const FiniteLattice& lattice, std::size_t x) {
  PointSet s(Sort::Del, lattice.size());
  for (std::size_t y = 0; y < lattice.size(); ++y)
    if (lattice.leq(x, y)) s.insert(y);
  return s;
}

std::optional<std::vector<std::size_t>> find_isomorphism(const FiniteLattice& from, const FiniteLattice& to) {
  const std::size_t n = from.size();
  if (n != to.size()) return std::nullopt;
  std::vector<std::size_t> map(n);
  std::vector<bool> used(n, false);
  auto extend = [&](auto&& self, std::size_t k) -> bool {
    if (k == n) return true;
    for (std::size_t y = 0; y < n; ++y) {
      if (used[y]) continue;
      bool ok = true;
      for (std::size_t i = 0; i < k && ok; ++i)
        ok = from.leq(i, k) == to.leq(map[i], y) && from.leq(k, i) == to.leq(y, map[i]);
      if (!ok) continue;
      used[y] = true;
      map[k] = y;
      if (self(self, k + 1)) return true;
      used[y] = false;
    }
    return false;
  };
  if (!extend(extend, 0)) return std::nullopt;
  return map;
}

}  // namespace polarity
