#include "polarity/sorts.hpp"

#include <algorithm>
#include <cctype>

#include "polarity/error.hpp"

namespace polarity {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool is_indexed_name(std::string_view name, char head) {
  if (name.size() < 2 || name[0] != head) return false;
  return std::all_of(name.begin() + 1, name.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

}  // namespace

Sort sort_from_char(char c) {
  switch (c) {
    case '1':
      return Sort::One;
    case 'd':
    case 'D':
      return Sort::Del;
    default:
      throw SortError(std::string("not a sort: '") + c + "'");
  }
}

std::string DistributionType::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    if (i) out += ',';
    out += sort_char(inputs[i]);
  }
  out += "->";
  out += sort_char(output);
  return out;
}

DistributionType DistributionType::parse(std::string_view text) {
  text = trim(text);
  auto arrow = text.find("->");
  if (arrow == std::string_view::npos) throw SortError("distribution type needs '->': " + std::string(text));
  DistributionType d;
  auto out = trim(text.substr(arrow + 2));
  if (out.size() != 1) throw SortError("bad output sort in " + std::string(text));
  d.output = sort_from_char(out[0]);
  auto in = text.substr(0, arrow);
  for (char c : in) {
    if (c == ',' || std::isspace(static_cast<unsigned char>(c))) continue;
    d.inputs.push_back(sort_from_char(c));
  }
  if (d.inputs.empty()) throw SortError("distribution type needs at least one input: " + std::string(text));
  return d;
}

std::string SortingType::to_string() const {
  std::string out(1, sort_char(output));
  out += ';';
  for (Sort s : inputs) out += sort_char(s);
  return out;
}

SortingType SortingType::parse(std::string_view text) {
  text = trim(text);
  auto semi = text.find(';');
  if (semi == std::string_view::npos) throw SortError("sorting type needs ';': " + std::string(text));
  auto head = trim(text.substr(0, semi));
  if (head.size() != 1) throw SortError("bad output sort in " + std::string(text));
  SortingType s;
  s.output = sort_from_char(head[0]);
  for (char c : text.substr(semi + 1)) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    s.inputs.push_back(sort_from_char(c));
  }
  if (s.inputs.empty()) throw SortError("sorting type needs at least one input: " + std::string(text));
  return s;
}

SimilarityType::SimilarityType(std::vector<DistributionType> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw DomainError("similarity type must be non-empty");
  for (const auto& d : entries_)
    if (d.inputs.empty()) throw DomainError("distribution types need arity >= 1");
}

std::string SimilarityType::to_string() const {
  std::string out = "<";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += ", ";
    out += "(" + entries_[i].to_string() + ")";
  }
  return out + ">";
}

void Signature::add(const std::string& name, const SortingType& sorting) {
  if (!is_identifier(name) || is_reserved_symbol(name)) throw DomainError("invalid relation name '" + name + "'");
  if (sorting.inputs.empty()) throw DomainError("relation '" + name + "' needs arity >= 1");
  if (!relations_.emplace(name, sorting).second) throw DomainError("duplicate relation name '" + name + "'");
}

const SortingType* Signature::find(std::string_view name) const {
  auto it = relations_.find(name);
  return it == relations_.end() ? nullptr : &it->second;
}

const SortingType& Signature::at(std::string_view name) const {
  if (auto* s = find(name)) return *s;
  throw UnknownNameError("unknown relation symbol '" + std::string(name) + "'");
}

bool is_identifier(std::string_view name) {
  if (name.empty()) return false;
  auto head = static_cast<unsigned char>(name[0]);
  if (!(std::isalpha(head) || name[0] == '_')) return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

bool is_reserved_symbol(std::string_view name) {
  static constexpr std::string_view kReserved[] = {"I",    "b",   "d",    "top",  "bot", "tt",  "ff", "U1",
                                                   "Ud",   "all", "ex",   "all1", "alld", "ex1", "exd"};
  if (std::find(std::begin(kReserved), std::end(kReserved), name) != std::end(kReserved)) return true;
  return is_indexed_name(name, 'P') || is_indexed_name(name, 'Q') || is_indexed_name(name, 'p');
}

}  // namespace polarity
