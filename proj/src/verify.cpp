#include "polarity/verify.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "polarity/bisim.hpp"
#include "polarity/catalog.hpp"
#include "polarity/error.hpp"
#include "polarity/galois.hpp"
#include "polarity/generators.hpp"
#include "polarity/io.hpp"
#include "polarity/semantics.hpp"
#include "polarity/syntax.hpp"
#include "polarity/transform.hpp"

namespace polarity {

// ---- report -----------------------------------------------------------------------

bool SuiteReport::record(std::size_t instance, const std::string& check, bool ok,
                         const std::function<SuiteFailure()>& explain, std::size_t limit) {
  CheckTally& t = checks[check];
  ++t.checked;
  instances = std::max(instances, instance + 1);
  if (ok) return true;
  ++t.failed;
  ++failure_count;
  if (failures.size() < limit) {
    SuiteFailure f = explain ? explain() : SuiteFailure{};
    f.instance = instance;
    f.check = check;
    failures.push_back(std::move(f));
  }
  return false;
}

const CheckTally& SuiteReport::tally(const std::string& check) const {
  static const CheckTally none;
  auto it = checks.find(check);
  return it == checks.end() ? none : it->second;
}

std::string SuiteReport::render() const {
  std::ostringstream out;
  out << "suite: " << suite << "\n";
  out << "seed: " << seed << "\n";
  out << "instances: " << instances << "\n";
  for (const auto& [name, t] : checks) out << "check " << name << ": " << (t.checked - t.failed) << "/" << t.checked << "\n";
  out << "failures: " << failure_count << "\n";
  for (const auto& f : failures) {
    out << "failure: instance " << f.instance << ", check " << f.check << "\n";
    if (!f.detail.empty()) out << "  detail: " << f.detail << "\n";
    if (!f.witness.empty()) {
      out << "  witness:\n";
      std::istringstream lines(f.witness);
      for (std::string line; std::getline(lines, line);) out << "    " << line << "\n";
    }
  }
  if (failure_count > failures.size()) out << "unreported failures: " << (failure_count - failures.size()) << "\n";
  if (aborted) out << "aborted: " << *aborted << "\n";
  out << "status: " << (aborted ? "aborted" : passed() ? "pass" : "fail") << "\n";
  return out.str();
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"galois", "concepts",   "prop21", "thm31", "cor31", "prop41",
                                              "sortreduce", "axioms", "bisim-invariance", "stability"};
  return names;
}

// ---- shared helpers ---------------------------------------------------------------

namespace {

std::string set_text(const SortedFrame& frame, const PointSet& s) { return "{" + write_set(frame, s) + "}"; }

std::string signature_line(const Signature& sig) {
  std::string out = "sig:";
  bool first = true;
  for (const auto& [name, sorting] : sig.relations()) {
    out += (first ? " " : " , ") + name + " " + sorting.to_string();
    first = false;
  }
  return out;
}

std::string section(const std::string& title, const std::string& body) { return "--- " + title + "\n" + body; }

double random_density(Rng& rng) { return 0.2 + 0.1 * static_cast<double>(rng.below(7)); }

/// Carriers of at least `min_size` points (clamped to the maxima). Larger frames have
/// more non-distributive concept lattices, which is where translation bugs show.
SortedFrame sample_frame(const Signature& sig, std::size_t max_a, std::size_t max_b, Rng& rng,
                         std::size_t min_size = 1) {
  auto draw = [&](std::size_t hi) {
    hi = std::max<std::size_t>(1, hi);
    return rng.between(std::clamp<std::size_t>(min_size, 1, hi), hi);
  };
  const std::size_t a = draw(max_a);
  const std::size_t b = draw(max_b);
  return random_frame(a, b, sig, random_density(rng), rng);
}

/// ⊤, ⊥, p_i ∧ p_j, p_i ∨ p_j and every operator applied to variables.
std::vector<LatticeFormula> one_step_formulas(const Signature& sig, std::size_t vars) {
  using LF = LatticeFormula;
  std::vector<LF> out{LF::top(), LF::bot()};
  for (std::size_t i = 0; i < vars; ++i)
    for (std::size_t j = i + 1; j < vars; ++j) {
      out.push_back(LF::conj(LF::var(i), LF::var(j)));
      out.push_back(LF::disj(LF::var(i), LF::var(j)));
    }
  for (const auto& [name, sorting] : sig.relations()) {
    std::vector<LF> args;
    for (std::size_t k = 0; k < sorting.inputs.size(); ++k) args.push_back(LF::var(k % vars));
    out.push_back(LF::op(name, distribution_of(sorting), std::move(args)));
  }
  return out;
}

bool extents_union_closed(const SortedFrame& frame) {
  const auto concepts = all_concepts(frame).concepts;
  for (const auto& x : concepts)
    for (const auto& y : concepts)
      if (!is_closed(frame, x.extent | y.extent)) return false;
  return true;
}

std::vector<PointSet> all_subsets(Sort sort, std::size_t n) {
  if (n > 16) throw ResourceError("carrier of " + std::to_string(n) + " points is too large for subset enumeration");
  std::vector<PointSet> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) out.push_back(PointSet::from_mask(sort, n, m));
  return out;
}

/// Repeatedly descends to a child of the same kind that still fails.
template <typename F, typename Pred>
F shrink(F f, Pred fails) {
  bool progress = true;
  while (progress) {
    progress = false;
    for (const auto& child : f.args()) {
      bool still = false;
      try {
        still = fails(child);
      } catch (const Error&) {
        still = false;
      }
      if (still) {
        f = child;
        progress = true;
        break;
      }
    }
  }
  return f;
}

std::vector<std::pair<std::string, SortedFrame>> canonical_catalog_frames() {
  std::vector<std::pair<std::string, SortedFrame>> out;
  for (const auto& e : catalog_expansions()) out.emplace_back(e.lattice + "/" + e.preset, canonical_frame(e.expansion));
  return out;
}

// ---- galois ---------------------------------------------------------------------------

void galois_frame(SuiteReport& r, std::size_t inst, const SortedFrame& f, const std::string& label,
                  std::size_t limit) {
  static const std::string coincidence_1 = "closure-coincidence-1", coincidence_d = "closure-coincidence-d",
                           triple_1 = "triple-1", triple_d = "triple-d", box_stable = "box-stable",
                           box_costable = "box-costable", antitone_1 = "antitone-1", antitone_d = "antitone-d",
                           residuation = "residuation";
  const auto us = all_subsets(Sort::One, f.size_a());
  const auto vs = all_subsets(Sort::Del, f.size_b());
  std::vector<PointSet> dia_u, up_u, box_v, down_v;
  for (const auto& u : us) {
    dia_u.push_back(residop(f, ResidKind::DiaAB, u));
    up_u.push_back(galois(f, GaloisSide::Right, u));
  }
  for (const auto& v : vs) {
    box_v.push_back(residop(f, ResidKind::BoxBA, v));
    down_v.push_back(galois(f, GaloisSide::Left, v));
  }
  // Details are rendered only for reported failures.
  auto witness = [&](auto detail) {
    return [&f, &label, detail] { return SuiteFailure{0, "", label + ": " + detail(), section("frame", write_frame(f))}; };
  };
  for (std::size_t i = 0; i < us.size(); ++i) {
    const PointSet lhs = residop(f, ResidKind::BoxBA, dia_u[i]);
    const PointSet rhs = galois(f, GaloisSide::Left, up_u[i]);
    r.record(inst, coincidence_1, lhs == rhs, witness([&] {
      return "U = " + set_text(f, us[i]) + ", box dia U = " + set_text(f, lhs) + ", closure = " + set_text(f, rhs);
    }), limit);
    auto at_u = witness([&] { return "U = " + set_text(f, us[i]); });
    r.record(inst, triple_1, galois(f, GaloisSide::Right, closure(f, Sort::One, us[i])) == up_u[i], at_u, limit);
    const PointSet box_u = residop(f, ResidKind::BoxAB, us[i]);
    r.record(inst, box_costable, closure(f, Sort::Del, box_u) == box_u, at_u, limit);
    for (std::uint64_t sub = i;; sub = (sub - 1) & i) {
      r.record(inst, antitone_1, up_u[i].subset_of(up_u[sub]),
               witness([&] { return "U = " + set_text(f, us[sub]) + " within " + set_text(f, us[i]); }), limit);
      if (sub == 0) break;
    }
  }
  for (std::size_t j = 0; j < vs.size(); ++j) {
    const PointSet lhs = residop(f, ResidKind::BoxAB, residop(f, ResidKind::DiaBA, vs[j]));
    const PointSet rhs = galois(f, GaloisSide::Right, down_v[j]);
    r.record(inst, coincidence_d, lhs == rhs, witness([&] {
      return "V = " + set_text(f, vs[j]) + ", box dia V = " + set_text(f, lhs) + ", co-closure = " + set_text(f, rhs);
    }), limit);
    auto at_v = witness([&] { return "V = " + set_text(f, vs[j]); });
    r.record(inst, triple_d, galois(f, GaloisSide::Left, closure(f, Sort::Del, vs[j])) == down_v[j], at_v, limit);
    r.record(inst, box_stable, closure(f, Sort::One, box_v[j]) == box_v[j], at_v, limit);
    for (std::uint64_t sub = j;; sub = (sub - 1) & j) {
      r.record(inst, antitone_d, down_v[j].subset_of(down_v[sub]),
               witness([&] { return "V = " + set_text(f, vs[sub]) + " within " + set_text(f, vs[j]); }), limit);
      if (sub == 0) break;
    }
  }
  for (std::size_t i = 0; i < us.size(); ++i)
    for (std::size_t j = 0; j < vs.size(); ++j)
      r.record(inst, residuation, dia_u[i].subset_of(vs[j]) == us[i].subset_of(box_v[j]),
               witness([&] { return "U = " + set_text(f, us[i]) + ", V = " + set_text(f, vs[j]); }), limit);
}

void suite_galois(const VerifyParams& p, SuiteReport& r) {
  std::size_t inst = 0;
  if (p.frames_dir) {
    for (const auto& [label, f] : load_frame_dir(*p.frames_dir)) galois_frame(r, inst++, f, label, p.max_reported);
  } else if (p.exhaustive) {
    std::size_t total = 0;
    for (std::size_t a = 1; a <= p.max_a; ++a)
      for (std::size_t b = 1; b <= p.max_b; ++b) {
        if (a * b >= 63 || (total += std::size_t{1} << (a * b)) > valuation_cap())
          throw ResourceError("exhaustive frame enumeration exceeds the cap of " + std::to_string(valuation_cap()) +
                              " frames");
      }
    for (std::size_t a = 1; a <= p.max_a; ++a)
      for (std::size_t b = 1; b <= p.max_b; ++b) {
        std::vector<std::string> na, nb;
        for (std::size_t i = 0; i < a; ++i) na.push_back("a" + std::to_string(i));
        for (std::size_t i = 0; i < b; ++i) nb.push_back("b" + std::to_string(i));
        for (std::uint64_t m = 0; m < (std::uint64_t{1} << (a * b)); ++m) {
          std::vector<std::pair<std::size_t, std::size_t>> inc;
          for (std::size_t k = 0; k < a * b; ++k)
            if ((m >> k) & 1u) inc.emplace_back(k / b, k % b);
          SortedFrame f(na, nb, std::move(inc), {});
          galois_frame(r, inst++, f, std::to_string(a) + "x" + std::to_string(b) + "#" + std::to_string(m),
                       p.max_reported);
        }
      }
  } else {
    for (const auto& [label, f] : canonical_catalog_frames()) galois_frame(r, inst++, f, label, p.max_reported);
    Rng rng(p.seed);
    const std::size_t n = p.count.value_or(200);
    for (std::size_t k = 0; k < n; ++k) {
      Rng local = rng.split();
      SortedFrame f = sample_frame(Signature{}, p.max_a, p.max_b, local);
      galois_frame(r, inst++, f, "random #" + std::to_string(k), p.max_reported);
    }
  }
  r.instances = inst;
}

// ---- concepts ----------------------------------------------------------------------

std::vector<std::size_t> decode(std::size_t idx, std::size_t n, std::size_t base) {
  std::vector<std::size_t> out(n);
  for (std::size_t j = 0; j < n; ++j, idx /= base) out[j] = idx % base;
  return out;
}

/// The canonical relation read literally: u R w̄ iff every ā with a_j ∈ w_j has φ(ā) ∈ u,
/// where u, w_j are principal filters (sort 1) or ideals (sort ∂) given as element sets.
bool remark_condition(const FiniteLatticeExpansion& exp, const LatticeOperator& op, std::size_t u,
                      const std::vector<std::size_t>& w) {
  const FiniteLattice& l = exp.lattice();
  const std::size_t n = l.size();
  auto member = [&](Sort s, std::size_t generator, std::size_t x) {
    return s == Sort::One ? l.leq(generator, x) : l.leq(x, generator);
  };
  std::size_t total = 1;
  for (std::size_t j = 0; j < op.type.arity(); ++j) total *= n;
  for (std::size_t idx = 0; idx < total; ++idx) {
    auto a = decode(idx, op.type.arity(), n);
    bool inside = true;
    for (std::size_t j = 0; j < a.size() && inside; ++j) inside = member(op.type.inputs[j], w[j], a[j]);
    if (inside && !member(op.type.output, u, exp.apply(op, a))) return false;
  }
  return true;
}

void suite_concepts(const VerifyParams& p, SuiteReport& r) {
  std::size_t inst = 0;
  for (const auto& name : catalog_lattice_names()) {
    const FiniteLattice l = catalog_lattice(name);
    const SortedFrame frame = canonical_frame(FiniteLatticeExpansion(l, {}));
    const ConceptLattice cl = all_concepts(frame);
    std::string problem;
    std::vector<std::size_t> image(l.size());
    if (cl.concepts.size() != l.size()) problem = "concept count " + std::to_string(cl.concepts.size());
    for (std::size_t x = 0; x < l.size() && problem.empty(); ++x) {
      auto idx = cl.find_extent(principal_downset(l, x));
      if (!idx) problem = "downset of " + l.name(x) + " is not an extent";
      else if (cl.concepts[*idx].intent != principal_upset(l, x)) problem = "intent of " + l.name(x) + " is not its upset";
      else image[x] = *idx;
    }
    if (problem.empty() && std::set<std::size_t>(image.begin(), image.end()).size() != l.size())
      problem = "map is not injective";
    for (std::size_t x = 0; x < l.size() && problem.empty(); ++x)
      for (std::size_t y = 0; y < l.size() && problem.empty(); ++y)
        if (l.leq(x, y) != cl.lattice.leq(image[x], image[y]))
          problem = "order mismatch at " + l.name(x) + ", " + l.name(y);
    auto witness = [&] {
      return SuiteFailure{0, "", name + ": " + problem,
                          section("lattice", write_lattice(FiniteLatticeExpansion(l, {})))};
    };
    r.record(inst, "isomorphism", problem.empty(), witness, p.max_reported);
    r.record(inst, "isomorphism-search", find_isomorphism(l, cl.lattice).has_value(), witness, p.max_reported);
    ++inst;
  }
  for (const auto& e : catalog_expansions()) {
    const SortedFrame frame = canonical_frame(e.expansion);
    const FiniteLattice& l = e.expansion.lattice();
    const std::string label = e.lattice + "/" + e.preset;
    for (const auto& op : e.expansion.operators()) {
      auto witness = [&](std::string detail) {
        return [&, detail = std::move(detail)] {
          return SuiteFailure{0, "", label + " " + op.name + ": " + detail, section("lattice", write_lattice(e.expansion))};
        };
      };
      auto stab = is_section_stable(frame, op.name);
      r.record(inst, "section-stable", stab.stable, witness("a dual section is not closed"), p.max_reported);
      const SortedRelation& rel = frame.relation(op.name);
      const std::size_t arity = op.type.arity();
      std::size_t total = 1;
      for (std::size_t j = 0; j < arity; ++j) total *= l.size();
      for (std::size_t idx = 0; idx < total; ++idx) {
        const auto w = decode(idx, arity, l.size());
        const std::size_t value = e.expansion.apply(op, w);
        std::vector<PointSet> args;
        for (std::size_t j = 0; j < arity; ++j)
          args.push_back(op.type.inputs[j] == Sort::One ? principal_downset(l, w[j]) : principal_upset(l, w[j]));
        const PointSet got = closed_op(frame, op.name, args, ClosedMode::Sorted);
        const PointSet want =
            op.type.output == Sort::One ? principal_downset(l, value) : principal_upset(l, value);
        std::string args_text;
        for (std::size_t j = 0; j < arity; ++j) args_text += (j ? "," : "") + l.name(w[j]);
        r.record(inst, "operator-roundtrip", got == want,
                 witness("(" + args_text + "): got " + set_text(frame, got) + ", expected " + set_text(frame, want)),
                 p.max_reported);
        for (std::size_t u = 0; u < l.size(); ++u) {
          Tuple t{u};
          t.insert(t.end(), w.begin(), w.end());
          r.record(inst, "remark-oracle", frame.holds(rel, t) == remark_condition(e.expansion, op, u, w),
                   witness("tuple (" + l.name(u) + ";" + args_text + ")"), p.max_reported);
        }
      }
    }
    ++inst;
  }
  Rng rng(p.seed);
  const std::size_t n = p.count.value_or(50);
  for (std::size_t k = 0; k < n; ++k, ++inst) {
    Rng local = rng.split();
    const SortedFrame f = sample_frame(Signature{}, p.max_a, p.max_b, local);
    const ConceptLattice cl = all_concepts(f);
    auto witness = [&f] { return SuiteFailure{0, "", "", section("frame", write_frame(f))}; };
    std::size_t closed = 0;
    for (const auto& u : all_subsets(Sort::One, f.size_a())) closed += closure(f, Sort::One, u) == u;
    r.record(inst, "concept-count", closed == cl.concepts.size(), witness, p.max_reported);
    for (const auto& c : cl.concepts)
      r.record(inst, "concept-closed",
               is_closed(f, c.extent) && c.intent == galois(f, GaloisSide::Right, c.extent) &&
                   c.extent == galois(f, GaloisSide::Left, c.intent),
               witness, p.max_reported);
    for (const auto& c : cl.concepts)
      for (const auto& d : cl.concepts)
        r.record(inst, "intersection-closed", cl.find_extent(c.extent & d.extent).has_value(), witness,
                 p.max_reported);
  }
  r.instances = inst;
}

// ---- prop21 ------------------------------------------------------------------------

void suite_prop21(const VerifyParams& p, SuiteReport& r) {
  std::size_t inst = 0;
  for (const auto& e : catalog_expansions()) {
    const SortedFrame frame = canonical_frame(e.expansion);
    const ConceptLattice cl = all_concepts(frame);
    std::vector<PointSet> stable, costable;
    for (const auto& c : cl.concepts) {
      stable.push_back(c.extent);
      costable.push_back(c.intent);
    }
    auto closed = [&](Sort s) -> const std::vector<PointSet>& { return s == Sort::One ? stable : costable; };
    auto join = [&](Sort s, const PointSet& x, const PointSet& y) { return closure(frame, s, x | y); };
    const std::string label = e.lattice + "/" + e.preset;
    for (const auto& rel : frame.relations()) {
      const auto& ins = rel.sorting.inputs;
      const Sort out = rel.sorting.output;
      std::size_t total = 1;
      for (Sort s : ins) total *= closed(s).size();
      auto describe = [&](const std::vector<PointSet>& args, std::size_t j, const PointSet& alt) {
        std::string text = label + " " + rel.name + " args (";
        for (std::size_t k = 0; k < args.size(); ++k) text += (k ? ", " : "") + set_text(frame, args[k]);
        return text + ") place " + std::to_string(j + 1) + " alternative " + set_text(frame, alt);
      };
      for (std::size_t idx = 0; idx < total; ++idx) {
        std::vector<PointSet> args;
        for (std::size_t k = 0, rest = idx; k < ins.size(); ++k) {
          args.push_back(closed(ins[k])[rest % closed(ins[k]).size()]);
          rest /= closed(ins[k]).size();
        }
        const PointSet base = closed_op(frame, rel.name, args, ClosedMode::Sorted);
        for (std::size_t j = 0; j < ins.size(); ++j) {
          for (const auto& alt : closed(ins[j])) {
            auto joined = args;
            joined[j] = join(ins[j], args[j], alt);
            auto other = args;
            other[j] = alt;
            const PointSet lhs = closed_op(frame, rel.name, joined, ClosedMode::Sorted);
            const PointSet rhs = join(out, base, closed_op(frame, rel.name, other, ClosedMode::Sorted));
            r.record(inst, "join-distribution", lhs == rhs, [&] {
              return SuiteFailure{0, "", describe(args, j, alt), section("lattice", write_lattice(e.expansion))};
            }, p.max_reported);
          }
          auto bottom = args;
          bottom[j] = closure(frame, ins[j], frame.empty_set(ins[j]));
          r.record(inst, "bottom-preservation",
                   closed_op(frame, rel.name, bottom, ClosedMode::Sorted) == closure(frame, out, frame.empty_set(out)),
                   [&] {
                     return SuiteFailure{0, "", describe(args, j, bottom[j]), section("lattice", write_lattice(e.expansion))};
                   },
                   p.max_reported);
        }
      }
    }
    ++inst;
  }
  r.instances = inst;
}

// ---- thm31 -------------------------------------------------------------------------

std::string category_of(const std::string& check) {
  auto end = check.find_first_of(" :");
  return end == std::string::npos ? check : check.substr(0, end);
}

void suite_thm31(const VerifyParams& p, SuiteReport& r) {
  Rng rng(p.seed);
  const std::size_t n = p.count.value_or(100);
  for (std::size_t inst = 0; inst < n; ++inst) {
    Rng local = rng.split();
    const Signature sig = random_preset_signature(local);
    // Every other instance insists on a frame whose joins are not all unions, so a wrong
    // ∨ or operator clause cannot hide. The retry cap keeps tiny --maxA/--maxB settings
    // from spinning.
    SortedFrame frame = sample_frame(sig, p.max_a, p.max_b, local, 3);
    for (int tries = 0; inst % 2 == 0 && tries < 500 && extents_union_closed(frame); ++tries)
      frame = sample_frame(sig, p.max_a, p.max_b, local, 3);
    ModalModel model = random_modal_model(frame, 2, 3, local);
    if (inst % 2 == 0) {
      // Q := B \ C^⊥ makes ⊟Q exactly the extent of C. Q0 and Q1 get a pair whose join
      // is not their union when the frame has one; Q2 gets a random concept.
      const auto concepts = all_concepts(frame).concepts;
      std::vector<std::pair<std::size_t, std::size_t>> gaps;
      for (std::size_t x = 0; x < concepts.size(); ++x)
        for (std::size_t y = x + 1; y < concepts.size(); ++y)
          if (!is_closed(frame, concepts[x].extent | concepts[y].extent)) gaps.emplace_back(x, y);
      auto pick = [&] { return local.below(concepts.size()); };
      const auto [x, y] = gaps.empty() ? std::pair{pick(), pick()} : gaps[local.below(gaps.size())];
      const std::size_t chosen[] = {x, y, pick()};
      for (auto& [i, q] : model.valuation.q) q = concepts[chosen[i % 3]].intent.complement();
    }
    const TranslationAssignment asg = random_assignment(sig, 3, 2, 3, local.below(3), local);
    const LatticeFormula phi = random_lattice_formula(sig, 3, 3, local);
    const LatticeFormula psi = random_lattice_formula(sig, 3, 3, local);
    auto witness_for = [&](const LatticeFormula& a, const LatticeFormula& b) {
      return section("model", write_model(model)) + section("assignment", write_assignment(asg)) +
             section("formulas", signature_line(sig) + "\n" + to_string(a) + "\n" + to_string(b) + "\n");
    };
    // The random pair plus every one-step formula over the variables against φ. A clause
    // of the translation only reaches the compared extents when it sits near the root,
    // which random formulas rarely arrange.
    std::vector<std::pair<LatticeFormula, LatticeFormula>> pairs{{phi, psi}};
    for (const auto& shape : one_step_formulas(sig, 3)) pairs.emplace_back(shape, phi);
    std::map<std::string, bool> by_category;
    std::map<std::string, std::pair<std::size_t, std::string>> first_failure;
    for (std::size_t k = 0; k < pairs.size(); ++k)
      for (const auto& c : verify_translation_theorem(model, asg, pairs[k].first, pairs[k].second).checks) {
        const std::string cat = category_of(c.name);
        auto [it, fresh] = by_category.emplace(cat, c.holds);
        if (!fresh) it->second = it->second && c.holds;
        if (!c.holds && !first_failure.count(cat)) first_failure[cat] = {k, c.name};
      }
    for (const auto& [cat, ok] : by_category) {
      r.record(inst, cat, ok, [&, cat = cat] {
        const auto& [a, b] = pairs[first_failure[cat].first];
        auto fails = [&, &b = b](const LatticeFormula& f) {
          for (const auto& c : verify_translation_theorem(model, asg, f, b).checks)
            if (category_of(c.name) == cat && !c.holds) return true;
          return false;
        };
        const LatticeFormula small = fails(a) ? shrink(a, fails) : a;
        return SuiteFailure{0, "", first_failure[cat].second, witness_for(small, b)};
      }, p.max_reported);
    }
    const LatticeModel induced = induced_model(model, asg);
    bool stable = true;
    for (const auto& [i, v] : induced.valuation()) stable = stable && is_closed(frame, v);
    r.record(inst, "induced-stable", stable, [&] { return SuiteFailure{0, "", "", witness_for(phi, psi)}; },
             p.max_reported);
    for (const auto* f : {&phi, &psi}) {
      const PointSet ext = modal_extent(model, translate(TranslationMode::Bullet, *f, asg));
      const PointSet co = modal_extent(model, translate(TranslationMode::Circle, *f, asg));
      r.record(inst, "duality", galois(frame, GaloisSide::Right, ext) == co,
               [&] { return SuiteFailure{0, "", to_string(*f), witness_for(phi, psi)}; }, p.max_reported);
    }
  }
  r.instances = n;
}

// ---- cor31 -------------------------------------------------------------------------

void suite_cor31(const VerifyParams& p, SuiteReport& r) {
  Rng rng(p.seed);
  const std::size_t n = p.count.value_or(50);
  const auto& presets = catalog_preset_names();
  std::vector<std::pair<std::string, SortedFrame>> extra;
  if (p.frames_dir) extra = load_frame_dir(*p.frames_dir);
  for (std::size_t inst = 0; inst < n; ++inst) {
    Rng local = rng.split();
    const std::string& preset = presets[local.below(presets.size())];
    const Signature sig = catalog_preset_signature(preset);
    std::vector<SortedFrame> frames;
    for (const auto& e : catalog_expansions())
      if (e.preset == preset) frames.push_back(canonical_frame(e.expansion));
    for (int k = 0; k < 2; ++k) frames.push_back(sample_frame(sig, 3, 3, local));
    for (const auto& [label, f] : extra)
      if (f.signature() == sig) frames.push_back(f);
    const LatticeFormula phi = random_lattice_formula(sig, 2, 2, local);
    const TranslationAssignment asg = random_assignment(sig, 2, 1, 1, 1, local);
    const ModalFormula alpha = translate(TranslationMode::Bullet, phi, asg);
    const ModalStabilityResult res = is_stable_modal(alpha, frames);
    r.record(inst, "translation-stable", res.stable, [&] {
      std::string detail = "frame " + std::to_string(res.frame);
      std::string witness = section("assignment", write_assignment(asg)) +
                            section("formulas", signature_line(sig) + "\n" + to_string(phi) + "\n");
      if (res.counter) {
        const ModalModel m(frames[res.frame], res.counter->valuation);
        detail += ", point " + m.frame.name(Sort::One, res.counter->point);
        witness = section("model", write_model(m)) + witness;
      }
      return SuiteFailure{0, "", detail, witness};
    }, p.max_reported);
    const ModalFormula beta = random_modal_formula(Sort::Del, sig, 2, 2, 3, local);
    const ModalFormula boxed = ModalFormula::box_b(beta);
    const auto [pre, pre_asg] = translation_preimage(boxed);
    r.record(inst, "range", translate(TranslationMode::Bullet, pre, pre_asg) == boxed, [&] {
      return SuiteFailure{0, "", to_string(boxed), section("formulas", signature_line(sig) + "\n" + to_string(boxed) + "\n")};
    }, p.max_reported);
  }
  r.instances = n;
}

// ---- prop41 / sortreduce -----------------------------------------------------------

FolAssignment random_assignment_for(const SortedFrame& frame, const std::vector<FolVar>& vars, Rng& rng) {
  FolAssignment out;
  for (const auto& v : vars) {
    const Sort s = v.sort == VarSort::Del ? Sort::Del : Sort::One;
    out[v.name] = Point{s, rng.below(frame.size(s))};
  }
  return out;
}

void suite_prop41(const VerifyParams& p, SuiteReport& r) {
  Rng rng(p.seed);
  const std::size_t n = p.count.value_or(200);
  for (std::size_t inst = 0; inst < n; ++inst) {
    Rng local = rng.split();
    const Signature sig = random_preset_signature(local);
    const SortedFrame frame = sample_frame(sig, p.max_a, p.max_b, local, 3);
    const ModalModel model = random_modal_model(frame, 2, 2, local);
    const Sort sort = local.chance(0.5) ? Sort::One : Sort::Del;
    const ModalFormula theta = random_modal_formula(sort, sig, 2, 2, 3, local);
    const std::size_t point = local.below(frame.size(sort));
    const FolVar x{sort == Sort::One ? "u" : "v", var_sort(sort)};
    const FolFormula st = standard_translation(theta, x);
    auto at = [&](const ModalFormula& f, std::size_t w) {
      return sat_modal(model, w, f) == eval_fol(frame, model.valuation, {{x.name, Point{sort, w}}},
                                                 standard_translation(f, x));
    };
    auto witness = [&](std::size_t w) {
      return [&, w] {
        const ModalFormula small = shrink(theta, [&](const ModalFormula& f) { return f.sort() == sort && !at(f, w); });
        return SuiteFailure{0, "", "point " + frame.name(sort, w) + ": " + to_string(small),
                            section("model", write_model(model)) +
                                section("formulas", signature_line(sig) + "\n" + to_string(small) + "\n")};
      };
    };
    const bool agree = sat_modal(model, point, theta) ==
                       eval_fol(frame, model.valuation, {{x.name, Point{sort, point}}}, st);
    r.record(inst, "agreement", agree, witness(point), p.max_reported);
    const PointSet ext = modal_extent(model, theta);
    for (std::size_t w = 0; w < frame.size(sort); ++w) {
      const bool sat = sat_modal(model, w, theta);
      r.record(inst, "agreement-all-points",
               sat == eval_fol(frame, model.valuation, {{x.name, Point{sort, w}}}, st), witness(w), p.max_reported);
      r.record(inst, "extent-pointwise", sat == ext.contains(w), witness(w), p.max_reported);
    }
  }
  r.instances = n;
}

void suite_sortreduce(const VerifyParams& p, SuiteReport& r) {
  Rng rng(p.seed);
  const std::size_t n = p.count.value_or(200);
  const std::vector<FolVar> scope{{"u", VarSort::One}, {"v", VarSort::Del}};
  for (std::size_t inst = 0; inst < n; ++inst) {
    Rng local = rng.split();
    const Signature sig = random_preset_signature(local);
    const SortedFrame frame = sample_frame(sig, p.max_a, p.max_b, local, 3);
    const ModalModel model = random_modal_model(frame, 2, 2, local);
    std::vector<FolVar> free;
    for (const auto& v : scope)
      if (local.chance(0.6)) free.push_back(v);
    const FolFormula phi = random_fol_formula(sig, free, 2, 2, 4, local);
    const FolAssignment asg = random_assignment_for(frame, free, local);
    const FolFormula reduct = sort_reduce(phi);
    auto witness = [&](const std::string& detail) {
      return [&, detail] {
        std::string decl;
        for (const auto& v : free) decl += "var " + v.name + " : " + to_string(v.sort) + "\n";
        std::string at;
        for (const auto& [name, pt] : asg) at += (at.empty() ? "" : ", ") + name + "=" + frame.name(pt.sort, pt.index);
        return SuiteFailure{0, "", detail + (at.empty() ? "" : " at " + at),
                            section("model", write_model(model)) +
                                section("formulas", signature_line(sig) + "\n" + decl + to_string(phi) + "\n")};
      };
    };
    r.record(inst, "agreement",
             eval_fol(frame, model.valuation, asg, phi) == eval_fol(frame, model.valuation, asg, reduct),
             witness("sorted and reduced evaluation differ"), p.max_reported);
    bool unsorted = true;
    for (const auto& [name, s] : reduct.free_variables()) unsorted = unsorted && s == VarSort::Any;
    r.record(inst, "reduct-unsorted", unsorted, witness("reduct keeps a sorted free variable"), p.max_reported);
    for (const auto& c : sorting_constraints(sig))
      r.record(inst, "constraints", eval_fol(frame, model.valuation, {}, c),
               witness("constraint fails: " + to_string(c)), p.max_reported);
  }
  r.instances = n;
}

// ---- axioms -------------------------------------------------------------------------

struct Axiom {
  std::string family;
  ModalFormula formula;
};

std::vector<Axiom> axioms_for(const Signature& sig) {
  using MF = ModalFormula;
  const MF p0 = MF::var(Sort::One, 0), p1 = MF::var(Sort::One, 1);
  const MF q0 = MF::var(Sort::Del, 0), q1 = MF::var(Sort::Del, 1);
  std::vector<Axiom> out{
      {"K", MF::implies(MF::box_b(MF::implies(q0, q1)), MF::implies(MF::box_b(q0), MF::box_b(q1)))},
      {"K", MF::implies(MF::box_d(MF::implies(p0, p1)), MF::implies(MF::box_d(p0), MF::box_d(p1)))},
      {"B", MF::implies(p0, MF::box_b(MF::dia_d(p0)))},
      {"B", MF::implies(q0, MF::box_d(MF::dia_b(q0)))},
  };
  auto iff = [](const MF& a, const MF& b) { return MF::conj(MF::implies(a, b), MF::implies(b, a)); };
  for (const auto& [name, sorting] : sig.relations()) {
    for (std::size_t j = 0; j < sorting.arity(); ++j) {
      std::vector<MF> base;
      for (Sort s : sorting.inputs) base.push_back(MF::var(s, 0));
      auto with = [&](const MF& theta) {
        auto args = base;
        args[j] = theta;
        return MF::diamond(name, sorting, args);
      };
      const Sort s = sorting.inputs[j];
      out.push_back({"normality", iff(with(MF::disj(MF::var(s, 0), MF::var(s, 1))),
                                      MF::disj(with(MF::var(s, 0)), with(MF::var(s, 1))))});
      out.push_back({"normality", iff(with(MF::bot(s)), MF::bot(sorting.output))});
    }
  }
  return out;
}

std::vector<ModalFormula> d_axioms() {
  using MF = ModalFormula;
  return {MF::implies(MF::box_b(MF::var(Sort::Del, 0)), MF::dia_b(MF::var(Sort::Del, 0))),
          MF::implies(MF::box_d(MF::var(Sort::One, 0)), MF::dia_d(MF::var(Sort::One, 0)))};
}

void suite_axioms(const VerifyParams& p, SuiteReport& r) {
  Rng rng(p.seed);
  const std::size_t n = p.count.value_or(100);
  std::vector<std::pair<std::string, SortedFrame>> frames;
  for (std::size_t k = 0; k < n; ++k) {
    Rng local = rng.split();
    const Signature sig = random_preset_signature(local);
    SortedFrame f = sample_frame(sig, p.max_a, p.max_b, local);
    for (std::size_t attempt = 0; p.serial_only && !check_seriality(f); ++attempt) {
      if (attempt == 1000) throw ResourceError("no serial frame found after 1000 samples");
      f = sample_frame(sig, p.max_a, p.max_b, local);
    }
    frames.emplace_back("random #" + std::to_string(k), std::move(f));
  }
  if (p.frames_dir)
    for (auto& entry : load_frame_dir(*p.frames_dir))
      if (!p.serial_only || check_seriality(entry.second)) frames.push_back(std::move(entry));
  std::size_t inst = 0;
  for (const auto& [label, frame] : frames) {
    auto witness = [&](const ModalFormula& ax, const ValidityResult& v) {
      return [&, ax, v] {
        std::string body = section("formulas", signature_line(frame.signature()) + "\n" + to_string(ax) + "\n");
        std::string detail = label + ": " + to_string(ax);
        if (v.counter) {
          const ModalModel m(frame, v.counter->valuation);
          detail += " refuted at " + frame.name(ax.sort(), v.counter->point);
          return SuiteFailure{0, "", detail, section("model", write_model(m)) + body};
        }
        return SuiteFailure{0, "", detail, section("frame", write_frame(frame)) + body};
      };
    };
    for (const auto& ax : axioms_for(frame.signature())) {
      const ValidityResult v = frame_valid_modal(frame, ax.formula);
      r.record(inst, ax.family, v.valid, witness(ax.formula, v), p.max_reported);
    }
    const bool serial = check_seriality(frame);
    bool all_valid = true;
    for (const auto& ax : d_axioms()) {
      const ValidityResult v = frame_valid_modal(frame, ax);
      all_valid = all_valid && v.valid;
      if (serial) r.record(inst, "D-serial", v.valid, witness(ax, v), p.max_reported);
    }
    if (!serial)
      r.record(inst, "D-nonserial-refuted", !all_valid, [&] {
        return SuiteFailure{0, "", label + ": D-axioms valid on a non-serial frame", section("frame", write_frame(frame))};
      }, p.max_reported);
    ++inst;
  }
  r.instances = inst;
}

// ---- bisim-invariance ----------------------------------------------------------------

std::vector<std::size_t> shuffled(std::size_t n, Rng& rng) {
  std::vector<std::size_t> v(n);
  std::iota(v.begin(), v.end(), 0);
  for (std::size_t i = n; i > 1; --i) std::swap(v[i - 1], v[rng.below(i)]);
  return v;
}

/// Isomorphic copy with points renumbered.
ModalModel permuted(const ModalModel& m, Rng& rng) {
  const SortedFrame& f = m.frame;
  const auto pa = shuffled(f.size_a(), rng);
  const auto pb = shuffled(f.size_b(), rng);
  auto map = [&](Sort s, std::size_t x) { return s == Sort::One ? pa[x] : pb[x]; };
  std::vector<std::string> na(f.size_a()), nb(f.size_b());
  for (std::size_t i = 0; i < na.size(); ++i) na[i] = "c" + std::to_string(i);
  for (std::size_t i = 0; i < nb.size(); ++i) nb[i] = "e" + std::to_string(i);
  std::vector<std::pair<std::size_t, std::size_t>> inc;
  for (auto [a, b] : f.incidence_pairs()) inc.emplace_back(pa[a], pb[b]);
  std::vector<SortedRelation> rels;
  for (const auto& rel : f.relations()) {
    SortedRelation copy{rel.name, rel.sorting, {}};
    for (const auto& t : rel.tuples) {
      Tuple u(t.size());
      for (std::size_t j = 0; j < t.size(); ++j) u[j] = map(j == 0 ? rel.sorting.output : rel.sorting.inputs[j - 1], t[j]);
      copy.tuples.push_back(std::move(u));
    }
    rels.push_back(std::move(copy));
  }
  SortedFrame g(na, nb, std::move(inc), std::move(rels));
  ModalValuation v;
  for (Sort s : {Sort::One, Sort::Del})
    for (const auto& [i, set] : m.valuation.of(s)) {
      PointSet image(s, g.size(s));
      set.for_each([&](std::size_t x) { image.insert(map(s, x)); });
      v.of(s).emplace(i, image);
    }
  return ModalModel(std::move(g), std::move(v));
}

/// Adds a copy of point x of sort s with the same incidence, tuples and valuation.
ModalModel with_duplicate(const ModalModel& m, Sort s, std::size_t x) {
  const SortedFrame& f = m.frame;
  auto na = f.names(Sort::One);
  auto nb = f.names(Sort::Del);
  const std::size_t fresh = f.size(s);
  (s == Sort::One ? na : nb).push_back(s == Sort::One ? "a_copy" : "b_copy");
  auto inc = f.incidence_pairs();
  for (auto [a, b] : f.incidence_pairs()) {
    if (s == Sort::One && a == x) inc.emplace_back(fresh, b);
    if (s == Sort::Del && b == x) inc.emplace_back(a, fresh);
  }
  std::vector<SortedRelation> rels;
  for (const auto& rel : f.relations()) {
    SortedRelation copy{rel.name, rel.sorting, {}};
    for (const auto& t : rel.tuples) {
      std::vector<std::size_t> positions;
      for (std::size_t j = 0; j < t.size(); ++j)
        if ((j == 0 ? rel.sorting.output : rel.sorting.inputs[j - 1]) == s && t[j] == x) positions.push_back(j);
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << positions.size()); ++mask) {
        Tuple u = t;
        for (std::size_t k = 0; k < positions.size(); ++k)
          if ((mask >> k) & 1u) u[positions[k]] = fresh;
        copy.tuples.push_back(std::move(u));
      }
    }
    rels.push_back(std::move(copy));
  }
  SortedFrame g(std::move(na), std::move(nb), std::move(inc), std::move(rels));
  ModalValuation v;
  for (Sort t : {Sort::One, Sort::Del})
    for (const auto& [i, set] : m.valuation.of(t)) {
      PointSet grown(t, g.size(t));
      set.for_each([&](std::size_t y) { grown.insert(y); });
      if (t == s && set.contains(x)) grown.insert(fresh);
      v.of(t).emplace(i, grown);
    }
  return ModalModel(std::move(g), std::move(v));
}

ModalModel partner(const ModalModel& m, std::size_t max_size, Rng& rng) {
  const std::size_t kind = rng.below(3);
  if (kind == 0) {
    const SortedFrame f = sample_frame(m.frame.signature(), max_size, max_size, rng);
    return random_modal_model(f, 1, 1, rng);
  }
  if (kind == 1) {
    const Sort s = rng.chance(0.5) ? Sort::One : Sort::Del;
    if (m.frame.size(s) < max_size) return permuted(with_duplicate(m, s, rng.below(m.frame.size(s))), rng);
  }
  return permuted(m, rng);
}

SortedPairRelation union_of_all_bisimulations(const ModalModel& m, const ModalModel& n) {
  std::vector<std::pair<Sort, std::pair<std::size_t, std::size_t>>> cells;
  for (Sort s : {Sort::One, Sort::Del})
    for (std::size_t x = 0; x < m.frame.size(s); ++x)
      for (std::size_t y = 0; y < n.frame.size(s); ++y) cells.push_back({s, {x, y}});
  if (cells.size() > 20) throw ResourceError("too many point pairs for exhaustive relation enumeration");
  SortedPairRelation all;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << cells.size()); ++mask) {
    SortedPairRelation rel;
    for (std::size_t k = 0; k < cells.size(); ++k)
      if ((mask >> k) & 1u) rel.pairs(cells[k].first).insert(cells[k].second);
    if (is_model_bisimulation(m, n, rel)) all = all | rel;
  }
  return all;
}

std::string pair_witness(const ModalModel& m, const ModalModel& n) {
  return section("left model", write_model(m)) + section("right model", write_model(n));
}

void suite_bisim(const VerifyParams& p, SuiteReport& r) {
  Rng rng(p.seed);
  const std::size_t count = p.count.value_or(50);
  const auto& presets = catalog_preset_names();
  std::map<std::string, std::vector<ModalFormula>> corpus;
  for (const auto& preset : presets) {
    Rng crng = rng.split();
    const Signature sig = catalog_preset_signature(preset);
    auto& list = corpus[preset];
    for (std::size_t k = 0; k < 500; ++k)
      list.push_back(random_modal_formula(k % 2 ? Sort::Del : Sort::One, sig, 1, 1, 3, crng));
  }
  for (std::size_t inst = 0; inst < count; ++inst) {
    Rng local = rng.split();
    const std::string& preset = presets[local.below(presets.size())];
    const Signature sig = catalog_preset_signature(preset);
    const ModalModel m = random_modal_model(sample_frame(sig, 3, 3, local), 1, 1, local);
    const ModalModel n = partner(m, 3, local);
    const SortedPairRelation big = largest_bisimulation(m, n);
    auto witness = [&](std::string detail) {
      return [&, detail = std::move(detail)] { return SuiteFailure{0, "", detail, pair_witness(m, n)}; };
    };
    r.record(inst, "fixpoint-sound", is_model_bisimulation(m, n, big), witness("largest relation is not a bisimulation"),
             p.max_reported);

    std::vector<PointSet> left, right;
    for (const auto& f : corpus[preset]) {
      left.push_back(modal_extent(m, f));
      right.push_back(modal_extent(n, f));
    }
    const std::size_t bound = m.frame.size_a() * n.frame.size_a() + m.frame.size_b() * n.frame.size_b();
    for (Sort s : {Sort::One, Sort::Del}) {
      for (std::size_t x = 0; x < m.frame.size(s); ++x)
        for (std::size_t y = 0; y < n.frame.size(s); ++y) {
          const std::string where = m.frame.name(s, x) + " ~ " + n.frame.name(s, y);
          if (big.contains(s, x, y)) {
            std::optional<std::size_t> bad;
            for (std::size_t k = 0; k < left.size() && !bad; ++k)
              if (left[k].sort() == s && left[k].contains(x) != right[k].contains(y)) bad = k;
            r.record(inst, "invariance", !bad,
                     witness(where + ": " + (bad ? to_string(corpus[preset][*bad]) : std::string())), p.max_reported);
            r.record(inst, "bounded-equivalence", modal_equiv(m, s, x, n, y, 3).equivalent, witness(where),
                     p.max_reported);
          } else {
            const EquivalenceResult eq = modal_equiv(m, s, x, n, y, bound);
            bool ok = !eq.equivalent && eq.distinguishing && eq.distinguishing->sort() == s &&
                      eq.distinguishing->modal_depth() <= bound && sat_modal(m, x, *eq.distinguishing) &&
                      !sat_modal(n, y, *eq.distinguishing);
            r.record(inst, "distinguishing", ok,
                     witness(where + (eq.distinguishing ? ": " + to_string(*eq.distinguishing) : ": no formula")),
                     p.max_reported);
          }
        }
    }

    const LatticeFormula phi = random_lattice_formula(sig, 2, 2, local);
    const TranslationAssignment asg = random_assignment(sig, 2, 1, 1, 1, local);
    const FolFormula st = standard_translation(translate(TranslationMode::Bullet, phi, asg), FolVar{"u", VarSort::One});
    for (auto [x, y] : big.pairs_a)
      r.record(inst, "translation-invariance",
               eval_fol(m.frame, m.valuation, {{"u", Point{Sort::One, x}}}, st) ==
                   eval_fol(n.frame, n.valuation, {{"u", Point{Sort::One, y}}}, st),
               witness(m.frame.name(Sort::One, x) + " ~ " + n.frame.name(Sort::One, y) + ": " + to_string(st)),
               p.max_reported);

    const ModalModel sm = random_modal_model(sample_frame(sig, 2, 2, local), 1, 1, local);
    const ModalModel sn = partner(sm, 2, local);
    r.record(inst, "union-oracle", largest_bisimulation(sm, sn) == union_of_all_bisimulations(sm, sn), [&] {
      return SuiteFailure{0, "", "largest bisimulation differs from the union of all bisimulations",
                          pair_witness(sm, sn)};
    }, p.max_reported);
  }
  r.instances = count;
}

// ---- stability ------------------------------------------------------------------------

void suite_stability(const VerifyParams& p, SuiteReport& r) {
  Rng rng(p.seed);
  const std::size_t n = p.count.value_or(50);
  const auto& presets = catalog_preset_names();
  std::map<std::string, std::vector<ModalModel>> families;
  for (std::size_t k = 0; k < presets.size(); ++k)
    families[presets[k]] = catalog_model_family(presets[k], 1, 1, 2, p.seed + 1000003 * (k + 1));
  const FolVar u{"u", VarSort::One};
  auto family_witness = [](const std::vector<ModalModel>& family, const StabilityResult& res) {
    if (!res.witness) return std::string();
    return section("model", write_model(family[res.witness->model]));
  };
  for (std::size_t inst = 0; inst < n; ++inst) {
    Rng local = rng.split();
    const std::string& preset = presets[local.below(presets.size())];
    const Signature sig = catalog_preset_signature(preset);
    const auto& family = families[preset];
    const LatticeFormula phi = random_lattice_formula(sig, 2, 2, local);
    const TranslationAssignment asg = random_assignment(sig, 2, 1, 1, 1, local);
    const FolFormula st = standard_translation(translate(TranslationMode::Bullet, phi, asg), u);
    const StabilityResult res = is_stable_fol(st, u.name, family);
    r.record(inst, "translation-stable", res.stable, [&] {
      std::string detail = to_string(phi);
      if (res.witness)
        detail += " at " + family[res.witness->model].frame.name(Sort::One, res.witness->point);
      return SuiteFailure{0, "", detail,
                          family_witness(family, res) + section("assignment", write_assignment(asg)) +
                              section("formulas", signature_line(sig) + "\n" + to_string(phi) + "\n")};
    }, p.max_reported);
    const FolFormula nested = stability_transform(st, u.name);
    const FolFormula prenex = stability_transform_prenex(st, u.name);
    for (std::size_t k = 0; k < family.size(); ++k)
      for (std::size_t a = 0; a < family[k].frame.size_a(); ++a) {
        const FolAssignment at{{u.name, Point{Sort::One, a}}};
        r.record(inst, "placement",
                 eval_fol(family[k].frame, family[k].valuation, at, nested) ==
                     eval_fol(family[k].frame, family[k].valuation, at, prenex),
                 [&] { return SuiteFailure{0, "", to_string(st), section("model", write_model(family[k]))}; },
                 p.max_reported);
      }
  }
  // Controls: A = {a0, a1}, B = {b0}, I = A × B makes {a0} non-closed (its closure is A).
  const SortedFrame control_frame({"a0", "a1"}, {"b0"}, {{0, 0}, {1, 0}}, {});
  ModalValuation v;
  v.p.emplace(0, PointSet::of(Sort::One, 2, {0}));
  v.q.emplace(0, PointSet::of(Sort::Del, 1, {}));
  const std::vector<ModalModel> control{ModalModel(control_frame, v)};
  const StabilityResult unstable = is_stable_fol(FolFormula::pred(Sort::One, 0, u), u.name, control);
  r.record(n, "control-unstable",
           !unstable.stable && unstable.witness && unstable.witness->point == 1 && !unstable.witness->original,
           [&] { return SuiteFailure{0, "", "P0(u) was not refuted at a1", section("model", write_model(control[0]))}; },
           p.max_reported);
  for (const auto& preset : presets) {
    const StabilityResult taut = is_stable_fol(FolFormula::eq(u, u), u.name, families[preset]);
    r.record(n, "control-tautology", taut.stable, {}, p.max_reported);
    const FolFormula boxed = standard_translation(ModalFormula::box_b(ModalFormula::var(Sort::Del, 0)), u);
    r.record(n, "control-boxed", is_stable_fol(boxed, u.name, families[preset]).stable, {}, p.max_reported);
  }
  r.record(n, "control-boxed",
           is_stable_fol(standard_translation(ModalFormula::box_b(ModalFormula::var(Sort::Del, 0)), u), u.name, control)
               .stable,
           {}, p.max_reported);
  r.instances = n + 1;
}

}  // namespace

// ---- public entry points ---------------------------------------------------------------

std::vector<ModalModel> catalog_model_family(std::string_view preset, std::size_t p_vars, std::size_t q_vars,
                                             std::size_t per_frame, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<ModalModel> out;
  for (const auto& lattice : catalog_lattice_names()) {
    if (!catalog_supports(lattice, preset)) continue;
    const SortedFrame frame = canonical_frame(catalog_expansion(lattice, preset));
    for (std::size_t k = 0; k < per_frame; ++k) out.push_back(random_modal_model(frame, p_vars, q_vars, rng));
  }
  return out;
}

std::vector<std::pair<std::string, SortedFrame>> load_frame_dir(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) throw Error("'" + dir.string() + "' is not a directory");
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    const auto ext = entry.path().extension();
    if (entry.is_regular_file() && (ext == ".frame" || ext == ".model" || ext == ".lat")) files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<std::pair<std::string, SortedFrame>> out;
  for (const auto& file : files) {
    const std::string text = read_text_file(file);
    const std::string label = file.filename().string();
    try {
      if (file.extension() == ".frame") out.emplace_back(label, read_frame(text));
      else if (file.extension() == ".model") out.emplace_back(label, read_model(text).frame);
      else out.emplace_back(label, canonical_frame(read_lattice(text)));
    } catch (const ParseError& e) {
      throw ParseError(e.line(), e.column(), label + ": " + e.what());
    }
  }
  return out;
}

SuiteReport run_suite(std::string_view name, const VerifyParams& params) {
  using Runner = void (*)(const VerifyParams&, SuiteReport&);
  static const std::map<std::string, Runner, std::less<>> runners{
      {"galois", suite_galois},   {"concepts", suite_concepts},         {"prop21", suite_prop21},
      {"thm31", suite_thm31},     {"cor31", suite_cor31},               {"prop41", suite_prop41},
      {"sortreduce", suite_sortreduce}, {"axioms", suite_axioms},       {"bisim-invariance", suite_bisim},
      {"stability", suite_stability}};
  auto it = runners.find(name);
  if (it == runners.end()) throw UnknownNameError("unknown suite '" + std::string(name) + "'");
  SuiteReport report;
  try {
    it->second(params, report);
  } catch (const ResourceError& e) {
    report.aborted = e.what();
  }
  report.suite = std::string(name);
  report.seed = params.seed;
  return report;
}

}  // namespace polarity
