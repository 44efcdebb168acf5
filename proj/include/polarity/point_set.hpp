#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "polarity/sorts.hpp"

namespace polarity {

/// A subset of one carrier of a frame, tagged with its sort and the carrier size.
///
/// Binary operations require both operands to live in the same carrier; mixing
/// sorts or carrier sizes raises SortError. Carriers of up to 64 points are stored
/// inline without allocation.
class PointSet {
 public:
  PointSet() = default;
  PointSet(Sort sort, std::size_t universe);

  static PointSet full(Sort sort, std::size_t universe);
  /// Bit i of `mask` selects point i. Requires universe <= 64.
  static PointSet from_mask(Sort sort, std::size_t universe, std::uint64_t mask);
  static PointSet of(Sort sort, std::size_t universe, std::initializer_list<std::size_t> points);

  Sort sort() const noexcept { return sort_; }
  std::size_t universe() const noexcept { return universe_; }

  bool contains(std::size_t i) const noexcept {
    return i < universe_ && ((words()[i >> 6] >> (i & 63)) & 1u) != 0;
  }
  void insert(std::size_t i);
  void erase(std::size_t i);

  std::size_t count() const noexcept;
  bool empty() const noexcept;
  bool is_full() const noexcept { return count() == universe_; }
  bool subset_of(const PointSet& other) const;
  bool intersects(const PointSet& other) const;

  PointSet complement() const;
  PointSet& operator|=(const PointSet& other);
  PointSet& operator&=(const PointSet& other);
  PointSet& operator-=(const PointSet& other);
  friend PointSet operator|(PointSet a, const PointSet& b) { return a |= b; }
  friend PointSet operator&(PointSet a, const PointSet& b) { return a &= b; }
  friend PointSet operator-(PointSet a, const PointSet& b) { return a -= b; }

  friend bool operator==(const PointSet& a, const PointSet& b) noexcept;
  /// Arbitrary but fixed total order, for use as a map key.
  friend bool operator<(const PointSet& a, const PointSet& b) noexcept;

  std::vector<std::size_t> elements() const;
  /// Low 64 bits; exact when universe <= 64.
  std::uint64_t mask() const noexcept { return words().empty() ? 0 : words()[0]; }
  std::size_t hash() const noexcept;

  template <typename F>
  void for_each(F&& f) const {
    auto w = words();
    for (std::size_t k = 0; k < w.size(); ++k) {
      std::uint64_t bits = w[k];
      while (bits) {
        f(k * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
  }

 private:
  std::span<const std::uint64_t> words() const noexcept {
    return universe_ <= 64 ? std::span<const std::uint64_t>(&inline_, universe_ ? 1 : 0)
                           : std::span<const std::uint64_t>(heap_);
  }
  std::span<std::uint64_t> words() noexcept {
    return universe_ <= 64 ? std::span<std::uint64_t>(&inline_, universe_ ? 1 : 0) : std::span<std::uint64_t>(heap_);
  }
  void check_compatible(const PointSet& other, const char* op) const;
  void trim_tail() noexcept;

  Sort sort_ = Sort::One;
  std::size_t universe_ = 0;
  std::uint64_t inline_ = 0;
  std::vector<std::uint64_t> heap_;
};

struct PointSetHash {
  std::size_t operator()(const PointSet& s) const noexcept { return s.hash(); }
};

}  // namespace polarity
