#include "polarity/point_set.hpp"

#include <algorithm>

#include "polarity/error.hpp"

namespace polarity {

PointSet::PointSet(Sort sort, std::size_t universe) : sort_(sort), universe_(universe) {
  if (universe_ > 64) heap_.assign((universe_ + 63) / 64, 0);
}

PointSet PointSet::full(Sort sort, std::size_t universe) {
  PointSet s(sort, universe);
  for (auto& w : s.words()) w = ~std::uint64_t{0};
  s.trim_tail();
  return s;
}

PointSet PointSet::from_mask(Sort sort, std::size_t universe, std::uint64_t mask) {
  if (universe > 64) throw DomainError("from_mask requires a carrier of at most 64 points");
  PointSet s(sort, universe);
  s.inline_ = mask;
  s.trim_tail();
  return s;
}

PointSet PointSet::of(Sort sort, std::size_t universe, std::initializer_list<std::size_t> points) {
  PointSet s(sort, universe);
  for (auto p : points) s.insert(p);
  return s;
}

void PointSet::insert(std::size_t i) {
  if (i >= universe_) throw DomainError("point index " + std::to_string(i) + " outside carrier of size " + std::to_string(universe_));
  words()[i >> 6] |= std::uint64_t{1} << (i & 63);
}

void PointSet::erase(std::size_t i) {
  if (i >= universe_) throw DomainError("point index " + std::to_string(i) + " outside carrier of size " + std::to_string(universe_));
  words()[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
}

std::size_t PointSet::count() const noexcept {
  std::size_t n = 0;
  for (auto w : words()) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool PointSet::empty() const noexcept {
  for (auto w : words())
    if (w) return false;
  return true;
}

void PointSet::check_compatible(const PointSet& other, const char* op) const {
  if (sort_ != other.sort_ || universe_ != other.universe_)
    throw SortError(std::string(op) + ": operands live in different carriers (" + sort_char(sort_) + "/" +
                    std::to_string(universe_) + " vs " + sort_char(other.sort_) + "/" + std::to_string(other.universe_) + ")");
}

bool PointSet::subset_of(const PointSet& other) const {
  check_compatible(other, "subset");
  auto a = words();
  auto b = other.words();
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] & ~b[k]) return false;
  return true;
}

bool PointSet::intersects(const PointSet& other) const {
  check_compatible(other, "intersects");
  auto a = words();
  auto b = other.words();
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] & b[k]) return true;
  return false;
}

PointSet PointSet::complement() const {
  PointSet s = *this;
  for (auto& w : s.words()) w = ~w;
  s.trim_tail();
  return s;
}

PointSet& PointSet::operator|=(const PointSet& other) {
  check_compatible(other, "union");
  auto a = words();
  auto b = other.words();
  for (std::size_t k = 0; k < a.size(); ++k) a[k] |= b[k];
  return *this;
}

PointSet& PointSet::operator&=(const PointSet& other) {
  check_compatible(other, "intersection");
  auto a = words();
  auto b = other.words();
  for (std::size_t k = 0; k < a.size(); ++k) a[k] &= b[k];
  return *this;
}

PointSet& PointSet::operator-=(const PointSet& other) {
  check_compatible(other, "difference");
  auto a = words();
  auto b = other.words();
  for (std::size_t k = 0; k < a.size(); ++k) a[k] &= ~b[k];
  return *this;
}

bool operator==(const PointSet& a, const PointSet& b) noexcept {
  if (a.sort_ != b.sort_ || a.universe_ != b.universe_) return false;
  auto x = a.words();
  auto y = b.words();
  return std::equal(x.begin(), x.end(), y.begin(), y.end());
}

bool operator<(const PointSet& a, const PointSet& b) noexcept {
  if (a.sort_ != b.sort_) return a.sort_ < b.sort_;
  if (a.universe_ != b.universe_) return a.universe_ < b.universe_;
  auto x = a.words();
  auto y = b.words();
  return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
}

std::vector<std::size_t> PointSet::elements() const {
  std::vector<std::size_t> out;
  for_each([&](std::size_t i) { out.push_back(i); });
  return out;
}

std::size_t PointSet::hash() const noexcept {
  std::size_t h = universe_ * 2 + (sort_ == Sort::Del ? 1 : 0);
  for (auto w : words()) h ^= static_cast<std::size_t>(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

void PointSet::trim_tail() noexcept {
  auto w = words();
  if (w.empty()) return;
  std::size_t used = universe_ & 63;
  if (used) w.back() &= (std::uint64_t{1} << used) - 1;
}

}  // namespace polarity
