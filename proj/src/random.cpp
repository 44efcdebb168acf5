#include "polarity/random.hpp"

#include "polarity/error.hpp"

namespace polarity {

bool Rng::chance(double p) {
  if (p <= 0.0) return false;
  if (p >= 1.0) return true;
  return static_cast<double>(next() >> 11) * 0x1.0p-53 < p;
}

SortedFrame random_frame(std::size_t size_a, std::size_t size_b, const Signature& signature, double density,
                         std::uint64_t seed) {
  Rng rng(seed);
  return random_frame(size_a, size_b, signature, density, rng);
}

SortedFrame random_frame(std::size_t size_a, std::size_t size_b, const Signature& signature, double density, Rng& rng) {
  if (size_a == 0 || size_b == 0) throw DomainError("random_frame: both carriers must be non-empty");
  if (!(density >= 0.0 && density <= 1.0)) throw DomainError("random_frame: density must lie in [0, 1]");
  std::vector<std::string> a_names, b_names;
  for (std::size_t i = 0; i < size_a; ++i) a_names.push_back("a" + std::to_string(i));
  for (std::size_t i = 0; i < size_b; ++i) b_names.push_back("b" + std::to_string(i));

  std::vector<std::pair<std::size_t, std::size_t>> incidence;
  for (std::size_t a = 0; a < size_a; ++a)
    for (std::size_t b = 0; b < size_b; ++b)
      if (rng.chance(density)) incidence.emplace_back(a, b);

  auto carrier = [&](Sort s) { return s == Sort::One ? size_a : size_b; };
  std::vector<SortedRelation> relations;
  for (const auto& [name, sorting] : signature.relations()) {
    SortedRelation rel{name, sorting, {}};
    std::vector<Sort> places{sorting.output};
    places.insert(places.end(), sorting.inputs.begin(), sorting.inputs.end());
    Tuple t(places.size(), 0);
    while (true) {
      if (rng.chance(density)) rel.tuples.push_back(t);
      std::size_t k = 0;
      while (k < t.size() && ++t[k] == carrier(places[k])) t[k++] = 0;
      if (k == t.size()) break;
    }
    relations.push_back(std::move(rel));
  }
  return SortedFrame(std::move(a_names), std::move(b_names), std::move(incidence), std::move(relations));
}

PointSet random_subset(Sort sort, std::size_t universe, Rng& rng) {
  PointSet out(sort, universe);
  for (std::size_t i = 0; i < universe; ++i)
    if (rng.chance(0.5)) out.insert(i);
  return out;
}

}  // namespace polarity
