#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace polarity {

/// The two sorts of a polarity frame: `One` is the carrier A, `Del` the carrier B.
enum class Sort : std::uint8_t { One, Del };

constexpr Sort opposite(Sort s) noexcept { return s == Sort::One ? Sort::Del : Sort::One; }

/// External rendering: `1` or `d`.
constexpr char sort_char(Sort s) noexcept { return s == Sort::One ? '1' : 'd'; }

/// Parses `1` or `d` (also accepts `D`). Throws ParseError-free SortError on anything else.
Sort sort_from_char(char c);

/// Distribution type (i1,...,in; i_{n+1}) of a normal lattice operator.
struct DistributionType {
  std::vector<Sort> inputs;
  Sort output = Sort::One;

  std::size_t arity() const noexcept { return inputs.size(); }
  /// Renders as `1,d->d`.
  std::string to_string() const;
  /// Parses `1,d->d`; requires at least one input.
  static DistributionType parse(std::string_view text);

  friend bool operator==(const DistributionType&, const DistributionType&) = default;
};

/// Sorting type (i_{n+1}; i1...in) of a frame relation.
struct SortingType {
  Sort output = Sort::One;
  std::vector<Sort> inputs;

  std::size_t arity() const noexcept { return inputs.size(); }
  /// Renders as `1;1d`.
  std::string to_string() const;
  /// Parses `1;1d`; requires at least one input.
  static SortingType parse(std::string_view text);

  friend bool operator==(const SortingType&, const SortingType&) = default;
};

inline SortingType sorting_of(const DistributionType& d) { return SortingType{d.output, d.inputs}; }
inline DistributionType distribution_of(const SortingType& s) { return DistributionType{s.inputs, s.output}; }

/// A non-empty finite sequence of distribution types.
class SimilarityType {
 public:
  explicit SimilarityType(std::vector<DistributionType> entries);

  const std::vector<DistributionType>& entries() const noexcept { return entries_; }
  std::string to_string() const;

 private:
  std::vector<DistributionType> entries_;
};

/// Named relation symbols with their sorting types. One signature serves all three
/// languages: a relation `R` of sorting (o; i1..in) is the lattice operator `R` of
/// distribution type (i1..in; o), the modal diamond `<R>` and the first-order predicate `R`.
class Signature {
 public:
  Signature() = default;

  /// Throws DomainError on a duplicate or reserved name.
  void add(const std::string& name, const SortingType& sorting);
  const SortingType* find(std::string_view name) const;
  /// Throws UnknownNameError.
  const SortingType& at(std::string_view name) const;
  bool contains(std::string_view name) const { return find(name) != nullptr; }
  bool empty() const noexcept { return relations_.empty(); }

  const std::map<std::string, SortingType, std::less<>>& relations() const noexcept { return relations_; }

  friend bool operator==(const Signature&, const Signature&) = default;

 private:
  std::map<std::string, SortingType, std::less<>> relations_;
};

/// True for names that may not be used as relation or operator symbols
/// (`I`, `b`, `d`, constants, keywords and variable-shaped names such as `P3`).
bool is_reserved_symbol(std::string_view name);

/// True for `[A-Za-z_][A-Za-z0-9_]*`.
bool is_identifier(std::string_view name);

}  // namespace polarity
