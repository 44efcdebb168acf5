#include "polarity/model.hpp"

#include "polarity/error.hpp"
#include "polarity/galois.hpp"

namespace polarity {

const PointSet& ModalValuation::at(Sort s, std::size_t index) const {
  const auto& m = of(s);
  auto it = m.find(index);
  if (it == m.end())
    throw UnknownNameError(std::string("no valuation for ") + (s == Sort::One ? "P" : "Q") + std::to_string(index));
  return it->second;
}

PointSet ModalValuation::get_or_empty(Sort s, std::size_t index, std::size_t universe) const {
  const auto& m = of(s);
  auto it = m.find(index);
  return it == m.end() ? PointSet(s, universe) : it->second;
}

ModalModel::ModalModel(SortedFrame f, ModalValuation v) : frame(std::move(f)), valuation(std::move(v)) {
  for (const auto& [i, set] : valuation.p) frame.check_set(set, Sort::One, "valuation of P" + std::to_string(i));
  for (const auto& [i, set] : valuation.q) frame.check_set(set, Sort::Del, "valuation of Q" + std::to_string(i));
}

LatticeModel::LatticeModel(SortedFrame frame, std::map<std::size_t, PointSet> valuation, bool close)
    : frame_(std::move(frame)), valuation_(std::move(valuation)) {
  for (auto& [i, set] : valuation_) {
    frame_.check_set(set, Sort::One, "valuation of p" + std::to_string(i));
    PointSet closed = closure(frame_, Sort::One, set);
    if (closed == set) continue;
    if (!close) throw PreconditionError("valuation of p" + std::to_string(i) + " is not Galois-stable");
    set = closed;
  }
}

const PointSet& LatticeModel::value(std::size_t index) const {
  auto it = valuation_.find(index);
  if (it == valuation_.end()) throw UnknownNameError("no valuation for p" + std::to_string(index));
  return it->second;
}

ModalValuation LatticeModel::as_modal_valuation() const { return ModalValuation{valuation_, {}}; }

ModalModel random_modal_model(const SortedFrame& frame, std::size_t p_vars, std::size_t q_vars, Rng& rng) {
  ModalValuation v;
  for (std::size_t i = 0; i < p_vars; ++i) v.p.emplace(i, random_subset(Sort::One, frame.size_a(), rng));
  for (std::size_t i = 0; i < q_vars; ++i) v.q.emplace(i, random_subset(Sort::Del, frame.size_b(), rng));
  return ModalModel(frame, std::move(v));
}

LatticeModel random_lattice_model(const SortedFrame& frame, std::size_t vars, Rng& rng) {
  std::map<std::size_t, PointSet> v;
  for (std::size_t i = 0; i < vars; ++i) v.emplace(i, random_subset(Sort::One, frame.size_a(), rng));
  return LatticeModel(frame, std::move(v), true);
}

}  // namespace polarity
