#include "polarity/galois.hpp"

#include "polarity/error.hpp"

namespace polarity {

bool polarity_holds(const SortedFrame& frame, std::size_t a, std::size_t b) {
  if (a >= frame.size_a()) throw DomainError("point index " + std::to_string(a) + " is not in A");
  if (b >= frame.size_b()) throw DomainError("point index " + std::to_string(b) + " is not in B");
  return !frame.incident(a, b);
}

PointSet galois(const SortedFrame& frame, GaloisSide side, const PointSet& set) {
  if (side == GaloisSide::Right) {
    frame.check_set(set, Sort::One, "galois(right)");
    PointSet out = frame.full_set(Sort::Del);
    set.for_each([&](std::size_t a) { out -= frame.incidence_row(a); });
    return out;
  }
  frame.check_set(set, Sort::Del, "galois(left)");
  PointSet out = frame.full_set(Sort::One);
  set.for_each([&](std::size_t b) { out -= frame.incidence_column(b); });
  return out;
}

PointSet residop(const SortedFrame& frame, ResidKind kind, const PointSet& set) {
  switch (kind) {
    case ResidKind::DiaAB: {
      frame.check_set(set, Sort::One, "residop(diaAB)");
      PointSet out = frame.empty_set(Sort::Del);
      set.for_each([&](std::size_t a) { out |= frame.incidence_row(a); });
      return out;
    }
    case ResidKind::BoxBA: {
      frame.check_set(set, Sort::Del, "residop(boxBA)");
      PointSet out = frame.empty_set(Sort::One);
      for (std::size_t a = 0; a < frame.size_a(); ++a)
        if (frame.incidence_row(a).subset_of(set)) out.insert(a);
      return out;
    }
    case ResidKind::BoxAB:
      frame.check_set(set, Sort::One, "residop(boxAB)");
      return residop(frame, ResidKind::DiaAB, set.complement()).complement();
    case ResidKind::DiaBA:
      frame.check_set(set, Sort::Del, "residop(diaBA)");
      return residop(frame, ResidKind::BoxBA, set.complement()).complement();
  }
  throw DomainError("unknown residuated operator");
}

PointSet closure(const SortedFrame& frame, Sort sort, const PointSet& set) {
  frame.check_set(set, sort, "closure");
  if (sort == Sort::One) return galois(frame, GaloisSide::Left, galois(frame, GaloisSide::Right, set));
  return galois(frame, GaloisSide::Right, galois(frame, GaloisSide::Left, set));
}

bool is_closed(const SortedFrame& frame, const PointSet& set) { return closure(frame, set.sort(), set) == set; }

PointSet relation_section(const SortedFrame& frame, const SortedRelation& rel, std::span<const std::size_t> args) {
  if (args.size() != rel.arity()) throw SortError("relation '" + rel.name + "': wrong number of arguments");
  PointSet out = frame.empty_set(rel.sorting.output);
  for (const auto& t : rel.tuples)
    if (std::equal(args.begin(), args.end(), t.begin() + 1)) out.insert(t[0]);
  return out;
}

DualRelation::DualRelation(const SortedFrame& frame, std::string_view relation)
    : frame_(&frame), rel_(&frame.relation(relation)) {
  const auto& sorting = rel_->sorting;
  std::size_t total = 1;
  for (Sort s : sorting.inputs) total *= frame.size(s);
  images_.assign(total, PointSet());
  for_each_tuple(frame, sorting.inputs, [&](std::span<const std::size_t> args) {
    PointSet section = relation_section(frame, *rel_, args);
    images_[offset(args)] = sorting.output == Sort::One ? galois(frame, GaloisSide::Right, section)
                                                        : galois(frame, GaloisSide::Left, section);
  });
}

std::size_t DualRelation::offset(std::span<const std::size_t> args) const {
  const auto& inputs = rel_->sorting.inputs;
  if (args.size() != inputs.size()) throw SortError("dual relation '" + rel_->name + "': wrong number of arguments");
  std::size_t off = 0;
  std::size_t stride = 1;
  for (std::size_t j = 0; j < inputs.size(); ++j) {
    if (args[j] >= frame_->size(inputs[j])) throw SortError("dual relation '" + rel_->name + "': ill-sorted argument");
    off += args[j] * stride;
    stride *= frame_->size(inputs[j]);
  }
  return off;
}

const PointSet& DualRelation::at(std::span<const std::size_t> args) const { return images_[offset(args)]; }

SectionStability is_section_stable(const SortedFrame& frame, std::string_view relation) {
  DualRelation dual(frame, relation);
  const auto& inputs = dual.relation().sorting.inputs;
  const Sort head = dual.head_sort();
  const std::size_t n = inputs.size();

  // Dual tuple places: 0 = head (sort `head`), j = argument j (sort inputs[j-1]).
  std::vector<Sort> places;
  places.push_back(head);
  places.insert(places.end(), inputs.begin(), inputs.end());

  for (std::size_t open = 0; open <= n; ++open) {
    std::vector<Sort> fixed_sorts;
    for (std::size_t p = 0; p <= n; ++p)
      if (p != open) fixed_sorts.push_back(places[p]);
    std::optional<SectionWitness> found;
    for_each_tuple(frame, fixed_sorts, [&](std::span<const std::size_t> fixed) {
      if (found) return;
      Tuple full(n + 1, 0);
      for (std::size_t p = 0, k = 0; p <= n; ++p)
        if (p != open) full[p] = fixed[k++];
      PointSet section = frame.empty_set(places[open]);
      for (std::size_t x = 0; x < frame.size(places[open]); ++x) {
        full[open] = x;
        std::span<const std::size_t> args(full.data() + 1, n);
        if (dual.at(args).contains(full[0])) section.insert(x);
      }
      PointSet closed = closure(frame, places[open], section);
      if (closed != section) {
        full[open] = 0;
        found = SectionWitness{open, full, section, closed};
      }
    });
    if (found) return SectionStability{false, std::move(found)};
  }
  return SectionStability{};
}

PointSet image_op(const SortedFrame& frame, std::string_view relation, std::span<const PointSet> args) {
  const auto& rel = frame.relation(relation);
  if (args.size() != rel.arity())
    throw SortError("image operator of '" + rel.name + "' expects " + std::to_string(rel.arity()) + " arguments, got " +
                    std::to_string(args.size()));
  for (std::size_t j = 0; j < args.size(); ++j)
    frame.check_set(args[j], rel.sorting.inputs[j], "image operator argument " + std::to_string(j + 1));
  PointSet out = frame.empty_set(rel.sorting.output);
  for (const auto& t : rel.tuples) {
    bool inside = true;
    for (std::size_t j = 0; j < args.size() && inside; ++j) inside = args[j].contains(t[j + 1]);
    if (inside) out.insert(t[0]);
  }
  return out;
}

PointSet closed_op(const SortedFrame& frame, std::string_view relation, std::span<const PointSet> args,
                   ClosedMode mode) {
  const auto& rel = frame.relation(relation);
  const auto& sorting = rel.sorting;
  if (args.size() != rel.arity())
    throw SortError("closed operator of '" + rel.name + "' expects " + std::to_string(rel.arity()) + " arguments");

  auto require_closed = [&](const PointSet& s, Sort sort, std::size_t j) {
    frame.check_set(s, sort, "closed operator argument " + std::to_string(j + 1));
    if (!is_closed(frame, s))
      throw PreconditionError("closed operator of '" + rel.name + "': argument " + std::to_string(j + 1) + " is not " +
                              (sort == Sort::One ? "Galois-stable" : "Galois-co-stable"));
  };

  std::vector<PointSet> converted;
  converted.reserve(args.size());
  for (std::size_t j = 0; j < args.size(); ++j) {
    const Sort want = sorting.inputs[j];
    switch (mode) {
      case ClosedMode::Sorted:
        require_closed(args[j], want, j);
        converted.push_back(args[j]);
        break;
      case ClosedMode::FirstSort:
        require_closed(args[j], Sort::One, j);
        converted.push_back(want == Sort::One ? args[j] : galois(frame, GaloisSide::Right, args[j]));
        break;
      case ClosedMode::SecondSort:
        require_closed(args[j], Sort::Del, j);
        converted.push_back(want == Sort::Del ? args[j] : galois(frame, GaloisSide::Left, args[j]));
        break;
    }
  }
  PointSet result = closure(frame, sorting.output, image_op(frame, relation, converted));
  if (mode == ClosedMode::FirstSort && sorting.output == Sort::Del) return galois(frame, GaloisSide::Left, result);
  if (mode == ClosedMode::SecondSort && sorting.output == Sort::One) return galois(frame, GaloisSide::Right, result);
  return result;
}

bool check_seriality(const SortedFrame& frame) {
  for (std::size_t a = 0; a < frame.size_a(); ++a)
    if (frame.incidence_row(a).empty()) return false;
  for (std::size_t b = 0; b < frame.size_b(); ++b)
    if (frame.incidence_column(b).empty()) return false;
  return true;
}

}  // namespace polarity
