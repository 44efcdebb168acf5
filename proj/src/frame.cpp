#include "polarity/frame.hpp"

#include <algorithm>

#include "polarity/error.hpp"

namespace polarity {

namespace {

void index_names(const std::vector<std::string>& names, std::map<std::string, std::size_t, std::less<>>& index,
                 char sort) {
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i].empty()) throw DomainError(std::string("empty point name in sort ") + sort);
    if (!index.emplace(names[i], i).second) throw DomainError("duplicate point name '" + names[i] + "'");
  }
}

}  // namespace

SortedFrame::SortedFrame(std::vector<std::string> points_a, std::vector<std::string> points_b,
                         std::vector<std::pair<std::size_t, std::size_t>> incidence,
                         std::vector<SortedRelation> relations)
    : names_a_(std::move(points_a)), names_b_(std::move(points_b)), relations_(std::move(relations)) {
  if (names_a_.empty() || names_b_.empty()) throw DomainError("both sorts of a frame must be non-empty");
  index_names(names_a_, index_a_, '1');
  index_names(names_b_, index_b_, 'd');
  for (const auto& [name, i] : index_a_)
    if (index_b_.count(name)) throw DomainError("point name '" + name + "' used in both sorts");

  rows_.assign(names_a_.size(), PointSet(Sort::Del, names_b_.size()));
  cols_.assign(names_b_.size(), PointSet(Sort::One, names_a_.size()));
  for (auto [a, b] : incidence) {
    if (a >= names_a_.size() || b >= names_b_.size()) throw SortError("incidence pair is not well-sorted");
    rows_[a].insert(b);
    cols_[b].insert(a);
  }

  Signature sig;
  for (auto& rel : relations_) {
    sig.add(rel.name, rel.sorting);
    for (const auto& t : rel.tuples) {
      if (t.size() != rel.arity() + 1)
        throw SortError("relation '" + rel.name + "': tuple length " + std::to_string(t.size()) + ", expected " +
                        std::to_string(rel.arity() + 1));
      if (t[0] >= size(rel.sorting.output)) throw SortError("relation '" + rel.name + "': head is not well-sorted");
      for (std::size_t j = 0; j < rel.arity(); ++j)
        if (t[j + 1] >= size(rel.sorting.inputs[j]))
          throw SortError("relation '" + rel.name + "': argument " + std::to_string(j + 1) + " is not well-sorted");
    }
    std::sort(rel.tuples.begin(), rel.tuples.end());
    rel.tuples.erase(std::unique(rel.tuples.begin(), rel.tuples.end()), rel.tuples.end());
  }
}

const std::string& SortedFrame::name(Sort s, std::size_t i) const {
  const auto& names = this->names(s);
  if (i >= names.size()) throw DomainError("point index out of range");
  return names[i];
}

std::optional<std::size_t> SortedFrame::find(Sort s, std::string_view name) const {
  const auto& index = s == Sort::One ? index_a_ : index_b_;
  auto it = index.find(name);
  if (it == index.end()) return std::nullopt;
  return it->second;
}

std::size_t SortedFrame::index_of(Sort s, std::string_view name) const {
  if (auto i = find(s, name)) return *i;
  if (find(opposite(s), name))
    throw SortError("point '" + std::string(name) + "' has sort " + sort_char(opposite(s)) + ", expected " + sort_char(s));
  throw DomainError("unknown point '" + std::string(name) + "'");
}

bool SortedFrame::incident(std::size_t a, std::size_t b) const {
  if (a >= size_a() || b >= size_b()) throw DomainError("incidence query outside the frame");
  return rows_[a].contains(b);
}

std::vector<std::pair<std::size_t, std::size_t>> SortedFrame::incidence_pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t a = 0; a < size_a(); ++a) rows_[a].for_each([&](std::size_t b) { out.emplace_back(a, b); });
  return out;
}

const SortedRelation* SortedFrame::find_relation(std::string_view name) const {
  for (const auto& r : relations_)
    if (r.name == name) return &r;
  return nullptr;
}

const SortedRelation& SortedFrame::relation(std::string_view name) const {
  if (auto* r = find_relation(name)) return *r;
  throw UnknownNameError("frame has no relation '" + std::string(name) + "'");
}

bool SortedFrame::holds(const SortedRelation& rel, std::span<const std::size_t> tuple) const {
  return std::binary_search(rel.tuples.begin(), rel.tuples.end(), tuple,
                            [](const auto& x, const auto& y) {
                              return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
                            });
}

Signature SortedFrame::signature() const {
  Signature sig;
  for (const auto& r : relations_) sig.add(r.name, r.sorting);
  return sig;
}

void SortedFrame::check_set(const PointSet& set, Sort s, std::string_view what) const {
  if (set.sort() != s || set.universe() != size(s))
    throw SortError(std::string(what) + ": expected a subset of sort " + sort_char(s) + " (size " +
                    std::to_string(size(s)) + "), got sort " + sort_char(set.sort()) + " (size " +
                    std::to_string(set.universe()) + ")");
}

bool operator==(const SortedFrame& a, const SortedFrame& b) {
  if (a.names_a_ != b.names_a_ || a.names_b_ != b.names_b_ || a.rows_ != b.rows_) return false;
  if (a.relations_.size() != b.relations_.size()) return false;
  for (std::size_t i = 0; i < a.relations_.size(); ++i) {
    const auto& x = a.relations_[i];
    const auto& y = b.relations_[i];
    if (x.name != y.name || !(x.sorting == y.sorting) || x.tuples != y.tuples) return false;
  }
  return true;
}

}  // namespace polarity
