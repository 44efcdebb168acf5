#pragma once

#include <cstddef>
#include <map>

#include "polarity/frame.hpp"
#include "polarity/random.hpp"

namespace polarity {

/// Sorted valuation: P_i ↦ subset of A, Q_i ↦ subset of B.
struct ModalValuation {
  std::map<std::size_t, PointSet> p;
  std::map<std::size_t, PointSet> q;

  std::map<std::size_t, PointSet>& of(Sort s) { return s == Sort::One ? p : q; }
  const std::map<std::size_t, PointSet>& of(Sort s) const { return s == Sort::One ? p : q; }
  /// Throws UnknownNameError for an unassigned variable.
  const PointSet& at(Sort s, std::size_t index) const;
  /// The assigned set, or the empty set of the given carrier size.
  PointSet get_or_empty(Sort s, std::size_t index, std::size_t universe) const;

  friend bool operator==(const ModalValuation&, const ModalValuation&) = default;
};

/// A frame with an arbitrary sorted valuation.
struct ModalModel {
  SortedFrame frame;
  ModalValuation valuation;

  ModalModel() = default;
  /// Throws SortError unless each value is a subset of the right carrier.
  ModalModel(SortedFrame frame, ModalValuation valuation);
};

/// A frame with a valuation of lattice variables p_i by Galois-stable subsets of A.
class LatticeModel {
 public:
  LatticeModel() = default;
  /// Non-stable values throw PreconditionError unless `close` is set, in which case
  /// they are replaced by their closure.
  LatticeModel(SortedFrame frame, std::map<std::size_t, PointSet> valuation, bool close = false);

  const SortedFrame& frame() const noexcept { return frame_; }
  const std::map<std::size_t, PointSet>& valuation() const noexcept { return valuation_; }
  /// Throws UnknownNameError.
  const PointSet& value(std::size_t index) const;
  /// Reads p_i as P_i, for first-order evaluation.
  ModalValuation as_modal_valuation() const;

 private:
  SortedFrame frame_;
  std::map<std::size_t, PointSet> valuation_;
};

/// Arbitrary sorted valuation of P_0..P_{p-1}, Q_0..Q_{q-1}.
ModalModel random_modal_model(const SortedFrame& frame, std::size_t p_vars, std::size_t q_vars, Rng& rng);
/// Closed valuation of p_0..p_{n-1} (random subsets, then closed).
LatticeModel random_lattice_model(const SortedFrame& frame, std::size_t vars, Rng& rng);

}  // namespace polarity
