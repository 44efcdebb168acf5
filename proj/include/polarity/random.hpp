#pragma once

#include <cstdint>
#include <random>

#include "polarity/frame.hpp"

namespace polarity {

/// Seeded generator with platform-independent helpers (std distributions are not
/// portable across standard libraries, so draws go through these methods only).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform-ish integer in [0, n); n must be positive.
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(next() % n); }
  /// Uniform integer in [lo, hi].
  std::size_t between(std::size_t lo, std::size_t hi) { return lo + below(hi - lo + 1); }
  /// True with probability p; p <= 0 never, p >= 1 always.
  bool chance(double p);
  Rng split() { return Rng(next()); }

 private:
  std::mt19937_64 engine_;
};

/// Random well-sorted frame with one relation per signature entry. Every incidence
/// pair and relation tuple is present independently with probability `density`.
/// Throws DomainError for empty carriers or a density outside [0, 1].
SortedFrame random_frame(std::size_t size_a, std::size_t size_b, const Signature& signature, double density,
                         std::uint64_t seed);
SortedFrame random_frame(std::size_t size_a, std::size_t size_b, const Signature& signature, double density, Rng& rng);

/// Uniformly random subset of a carrier.
PointSet random_subset(Sort sort, std::size_t universe, Rng& rng);

}  // namespace polarity
