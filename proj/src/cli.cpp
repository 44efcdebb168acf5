#include "polarity/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <optional>
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
#include "polarity/verify.hpp"

namespace polarity {

namespace {

using Json = nlohmann::ordered_json;
namespace fs = std::filesystem;

Json names_of(const SortedFrame& frame, const PointSet& set) {
  Json out = Json::array();
  set.for_each([&](std::size_t i) { out.push_back(frame.name(set.sort(), i)); });
  return out;
}

std::optional<std::pair<Sort, std::size_t>> find_point(const SortedFrame& frame, const std::string& name) {
  for (Sort s : {Sort::One, Sort::Del})
    if (auto i = frame.find(s, name)) return std::pair{s, *i};
  return std::nullopt;
}

std::pair<Sort, std::size_t> point_named(const SortedFrame& frame, const std::string& name) {
  auto p = find_point(frame, name);
  if (!p) throw UnknownNameError("unknown point '" + name + "'");
  return *p;
}

/// Formula sources: a positional text or the lines of a formula file.
struct FormulaInput {
  std::vector<std::string> texts;
  std::string file;

  /// (line, text) pairs plus the file preamble, if any.
  std::pair<std::vector<std::pair<std::size_t, std::string>>, FormulaFile> load() const {
    FormulaFile preamble;
    std::vector<std::pair<std::size_t, std::string>> out;
    if (!file.empty()) {
      preamble = read_formula_file(read_text_file(file));
      out = preamble.formulas;
    }
    for (const auto& t : texts) out.emplace_back(1, t);
    if (out.empty()) throw Error("no formula given");
    return {out, preamble};
  }
};

/// One value per occurrence, so a trailing positional formula is not swallowed.
CLI::Option* repeatable(CLI::Option* opt) {
  return opt->allow_extra_args(false)->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
}

void add_formula_input(CLI::App* cmd, FormulaInput& in) {
  cmd->add_option("formula", in.texts, "Formula text");
  cmd->add_option("--file", in.file, "Formula file (one formula per line)");
}

Signature merged(const Signature& base, const Signature& extra) {
  Signature out = base;
  for (const auto& [name, sorting] : extra.relations())
    if (!out.contains(name)) out.add(name, sorting);
  return out;
}

std::string lowercase_bool(bool b) { return b ? "true" : "false"; }

// ---- eval / extent ---------------------------------------------------------------------

struct EvalOptions {
  std::string model;
  std::string lang = "modal";
  std::string point;
  std::vector<std::string> assign;
  bool close = false;
  FormulaInput input;
};

LatticeModel lattice_model_of(const ModalModel& m, bool close) {
  if (!m.valuation.q.empty()) throw Error("lattice models take only P-valuation lines (read as p_i)");
  return LatticeModel(m.frame, m.valuation.p, close);
}

int cmd_eval(const EvalOptions& o, std::ostream& out) {
  const ModalModel model = read_model(read_text_file(o.model));
  const SortedFrame& frame = model.frame;
  auto [formulas, preamble] = o.input.load();
  const Signature sig = merged(frame.signature(), preamble.signature);
  bool all = true;
  auto emit = [&](Json record, bool verdict) {
    record["verdict"] = verdict;
    all = all && verdict;
    out << record.dump() << "\n";
  };
  if (o.lang == "modal") {
    for (const auto& [line, text] : formulas) {
      const ModalFormula f = parse_modal(text, sig, line);
      std::vector<std::size_t> points;
      if (!o.point.empty()) {
        auto [s, i] = point_named(frame, o.point);
        if (s != f.sort()) throw SortError("point '" + o.point + "' does not have the formula's sort");
        points.push_back(i);
      } else {
        for (std::size_t i = 0; i < frame.size(f.sort()); ++i) points.push_back(i);
      }
      for (std::size_t i : points)
        emit(Json{{"formula", to_string(f)}, {"point", frame.name(f.sort(), i)}}, sat_modal(model, i, f));
    }
  } else if (o.lang == "lattice") {
    const LatticeModel lm = lattice_model_of(model, o.close);
    for (const auto& [line, text] : formulas) {
      const LatticeFormula f = parse_lattice(text, sig, line);
      std::vector<std::pair<Sort, std::size_t>> points;
      if (!o.point.empty()) {
        points.push_back(point_named(frame, o.point));
      } else {
        for (Sort s : {Sort::One, Sort::Del})
          for (std::size_t i = 0; i < frame.size(s); ++i) points.emplace_back(s, i);
      }
      for (auto [s, i] : points)
        emit(Json{{"formula", to_string(f)}, {"point", frame.name(s, i)},
                  {"relation", s == Sort::One ? "satisfies" : "co-satisfies"}},
             sat_lattice(lm, s, i, f));
    }
  } else if (o.lang == "fol") {
    FolAssignment asg;
    std::map<std::string, VarSort, std::less<>> declared = preamble.variables;
    for (const auto& a : o.assign) {
      auto eq = a.find('=');
      if (eq == std::string::npos) throw Error("--assign expects NAME=POINT, got '" + a + "'");
      auto [s, i] = point_named(frame, a.substr(eq + 1));
      asg[a.substr(0, eq)] = Point{s, i};
      if (!declared.count(a.substr(0, eq))) declared[a.substr(0, eq)] = var_sort(s);
    }
    std::string at;
    for (const auto& [name, pt] : asg) at += (at.empty() ? "" : ",") + name + "=" + frame.name(pt.sort, pt.index);
    for (const auto& [line, text] : formulas) {
      const FolFormula f = parse_fol(text, sig, declared, line);
      emit(Json{{"formula", to_string(f)}, {"assignment", at}}, eval_fol(frame, model.valuation, asg, f));
    }
  } else {
    throw Error("unknown language '" + o.lang + "' (expected modal, lattice or fol)");
  }
  return all ? kHolds : kFails;
}

int cmd_extent(const EvalOptions& o, std::ostream& out) {
  const ModalModel model = read_model(read_text_file(o.model));
  auto [formulas, preamble] = o.input.load();
  const Signature sig = merged(model.frame.signature(), preamble.signature);
  for (const auto& [line, text] : formulas) {
    if (o.lang == "modal") {
      const ModalFormula f = parse_modal(text, sig, line);
      out << Json{{"formula", to_string(f)},
                  {"sort", std::string(1, sort_char(f.sort()))},
                  {"extent", names_of(model.frame, modal_extent(model, f))}}
                 .dump()
          << "\n";
    } else if (o.lang == "lattice") {
      const LatticeModel lm = lattice_model_of(model, o.close);
      const LatticeFormula f = parse_lattice(text, sig, line);
      const Concept c = lattice_extent(lm, f);
      out << Json{{"formula", to_string(f)},
                  {"extent", names_of(model.frame, c.extent)},
                  {"intent", names_of(model.frame, c.intent)}}
                 .dump()
          << "\n";
    } else {
      throw Error("extent supports the modal and lattice languages");
    }
  }
  return kHolds;
}

// ---- translate / sttrans -----------------------------------------------------------------

struct TranslateOptions {
  std::string mode = "bullet";
  std::string asg;
  std::string sig;
  bool expand = false;
  FormulaInput input;
};

int cmd_translate(const TranslateOptions& o, std::ostream& out) {
  auto [formulas, preamble] = o.input.load();
  const Signature sig = merged(parse_signature(o.sig), preamble.signature);
  if (o.mode != "bullet" && o.mode != "circle") throw Error("--mode must be bullet or circle");
  const TranslationAssignment asg = o.asg.empty() ? TranslationAssignment{} : read_assignment(read_text_file(o.asg), sig);
  for (const auto& [line, text] : formulas) {
    const LatticeFormula f = parse_lattice(text, sig, line);
    const ModalFormula m = translate(o.mode == "bullet" ? TranslationMode::Bullet : TranslationMode::Circle, f, asg);
    out << to_string(m, PrintOptions{o.expand}) << "\n";
  }
  return kHolds;
}

struct SttransOptions {
  std::string sig;
  std::string var;
  bool stability = false;
  bool prenex = false;
  FormulaInput input;
};

int cmd_sttrans(const SttransOptions& o, std::ostream& out) {
  auto [formulas, preamble] = o.input.load();
  const Signature sig = merged(parse_signature(o.sig), preamble.signature);
  for (const auto& [line, text] : formulas) {
    const ModalFormula m = parse_modal(text, sig, line);
    const FolVar x{o.var.empty() ? (m.sort() == Sort::One ? "u" : "v") : o.var, var_sort(m.sort())};
    FolFormula f = standard_translation(m, x);
    if (o.stability || o.prenex) f = o.prenex ? stability_transform_prenex(f, x.name) : stability_transform(f, x.name);
    out << to_string(f) << "\n";
  }
  return kHolds;
}

// ---- stable ------------------------------------------------------------------------------

struct StableOptions {
  std::string lang = "modal";
  std::vector<std::string> frames;
  std::vector<std::string> models;
  std::string frames_dir;
  std::string catalog;
  std::string var = "u";
  std::string sig;
  std::uint64_t seed = 1;
  FormulaInput input;
};

int cmd_stable(const StableOptions& o, std::ostream& out) {
  auto [formulas, preamble] = o.input.load();
  Signature sig = merged(parse_signature(o.sig), preamble.signature);
  if (!o.catalog.empty()) sig = merged(sig, catalog_preset_signature(o.catalog));
  bool all = true;
  if (o.lang == "modal") {
    std::vector<SortedFrame> frames;
    std::vector<std::string> labels;
    for (const auto& f : o.frames) {
      frames.push_back(read_frame(read_text_file(f)));
      labels.push_back(f);
    }
    for (const auto& m : o.models) {
      frames.push_back(read_model(read_text_file(m)).frame);
      labels.push_back(m);
    }
    if (!o.frames_dir.empty())
      for (auto& [label, f] : load_frame_dir(o.frames_dir)) {
        frames.push_back(std::move(f));
        labels.push_back(label);
      }
    if (!o.catalog.empty())
      for (const auto& lattice : catalog_lattice_names())
        if (catalog_supports(lattice, o.catalog)) {
          frames.push_back(canonical_frame(catalog_expansion(lattice, o.catalog)));
          labels.push_back(lattice + "/" + o.catalog);
        }
    if (frames.empty()) throw Error("no frames given (use --frame, --model, --frames or --catalog)");
    for (const auto& fr : frames) sig = merged(sig, fr.signature());
    for (const auto& [line, text] : formulas) {
      const ModalFormula f = parse_modal(text, sig, line);
      if (f.sort() != Sort::One) throw SortError("stability is defined for sort-1 formulas");
      const ModalStabilityResult res = is_stable_modal(f, frames);
      out << to_string(f) << ": " << (res.stable ? "stable" : "not stable") << "\n";
      if (!res.stable && res.counter) {
        const ModalModel witness(frames[res.frame], res.counter->valuation);
        out << "  frame: " << labels[res.frame] << "\n  point: " << witness.frame.name(Sort::One, res.counter->point)
            << "\n  witness:\n";
        std::istringstream lines(write_model(witness));
        for (std::string l; std::getline(lines, l);) out << "    " << l << "\n";
      }
      all = all && res.stable;
    }
  } else if (o.lang == "fol") {
    std::vector<ModalModel> family;
    std::vector<std::string> labels;
    for (const auto& m : o.models) {
      family.push_back(read_model(read_text_file(m)));
      labels.push_back(m);
    }
    // Without models, fall back to the modal catalog family.
    const std::string preset = o.catalog.empty() && o.models.empty() ? "modal" : o.catalog;
    if (!preset.empty()) {
      if (o.catalog.empty()) sig = merged(sig, catalog_preset_signature(preset));
      for (auto& m : catalog_model_family(preset, 2, 2, 2, o.seed)) {
        family.push_back(std::move(m));
        labels.push_back("catalog/" + preset + " #" + std::to_string(labels.size()));
      }
    }
    for (const auto& m : family) sig = merged(sig, m.frame.signature());
    auto declared = preamble.variables;
    declared[o.var] = VarSort::One;
    for (const auto& [line, text] : formulas) {
      const FolFormula f = parse_fol(text, sig, declared, line);
      const StabilityResult res = is_stable_fol(f, o.var, family);
      out << to_string(f) << ": " << (res.stable ? "stable" : "not stable") << "\n";
      if (!res.stable && res.witness) {
        const ModalModel& m = family[res.witness->model];
        out << "  model: " << labels[res.witness->model] << "\n  point: " << m.frame.name(Sort::One, res.witness->point)
            << "\n  original: " << lowercase_bool(res.witness->original)
            << "\n  transformed: " << lowercase_bool(!res.witness->original) << "\n  witness:\n";
        std::istringstream lines(write_model(m));
        for (std::string l; std::getline(lines, l);) out << "    " << l << "\n";
      }
      all = all && res.stable;
    }
  } else {
    throw Error("stable supports the modal and fol languages");
  }
  return all ? kHolds : kFails;
}

// ---- bisim -------------------------------------------------------------------------------

struct BisimOptions {
  std::string left;
  std::string right;
  std::string pairs;
  bool explain = false;
};

SortedPairRelation read_pairs(const std::string& text, const SortedFrame& m, const SortedFrame& n) {
  SortedPairRelation rel;
  std::istringstream in(text);
  std::size_t number = 0;
  for (std::string raw; std::getline(in, raw);) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream groups(raw);
    for (std::string group; std::getline(groups, group, ',');) {
      std::istringstream words(group);
      std::vector<std::string> w;
      for (std::string word; words >> word;) w.push_back(word);
      if (w.empty()) continue;
      if (w.size() != 2) throw ParseError(number, 1, "pair entries are 'x y'");
      auto x = find_point(m, w[0]);
      auto y = find_point(n, w[1]);
      if (!x) throw ParseError(number, 1, "unknown point '" + w[0] + "' of the first model");
      if (!y) throw ParseError(number, 1, "unknown point '" + w[1] + "' of the second model");
      if (x->first != y->first) throw ParseError(number, 1, "pair (" + w[0] + ", " + w[1] + ") mixes sorts");
      rel.pairs(x->first).insert({x->second, y->second});
    }
  }
  return rel;
}

int cmd_bisim(const BisimOptions& o, std::ostream& out) {
  const ModalModel m = read_model(read_text_file(o.left));
  const ModalModel n = read_model(read_text_file(o.right));
  if (!o.pairs.empty()) {
    const SortedPairRelation rel = read_pairs(read_text_file(o.pairs), m.frame, n.frame);
    if (auto v = find_model_bisimulation_violation(m, n, rel)) {
      out << "not a bisimulation\n  " << v->describe(m.frame, n.frame) << "\n";
      return kFails;
    }
    out << "bisimulation (" << rel.size() << " pairs)\n";
    return kHolds;
  }
  const SortedPairRelation big = largest_bisimulation(m, n);
  for (Sort s : {Sort::One, Sort::Del})
    for (auto [x, y] : big.pairs(s)) out << m.frame.name(s, x) << " " << n.frame.name(s, y) << "\n";
  if (o.explain) {
    const std::size_t depth = equivalence_depth_bound(m, n);
    for (Sort s : {Sort::One, Sort::Del})
      for (std::size_t x = 0; x < m.frame.size(s); ++x)
        for (std::size_t y = 0; y < n.frame.size(s); ++y) {
          if (big.contains(s, x, y)) continue;
          const EquivalenceResult eq = modal_equiv(m, s, x, n, y, depth);
          out << "# " << m.frame.name(s, x) << " " << n.frame.name(s, y) << ": "
              << (eq.distinguishing ? to_string(*eq.distinguishing) : std::string("equivalent")) << "\n";
        }
  }
  return kHolds;
}

// ---- canon / concepts --------------------------------------------------------------------

struct LatticeSource {
  std::string lattice_file;
  std::string catalog;
  std::string preset;

  FiniteLatticeExpansion load() const {
    if (!lattice_file.empty()) return read_lattice(read_text_file(lattice_file));
    if (catalog.empty()) throw Error("give a lattice file or --catalog NAME");
    if (preset.empty()) return FiniteLatticeExpansion(catalog_lattice(catalog), {});
    return catalog_expansion(catalog, preset);
  }
};

int cmd_canon(const LatticeSource& src, std::ostream& out) {
  out << write_frame(canonical_frame(src.load()));
  return kHolds;
}

struct ConceptsOptions {
  std::string frame;
  std::string model;
  LatticeSource lattice;
};

int cmd_concepts(const ConceptsOptions& o, std::ostream& out) {
  SortedFrame frame;
  if (!o.frame.empty()) frame = read_frame(read_text_file(o.frame));
  else if (!o.model.empty()) frame = read_model(read_text_file(o.model)).frame;
  else frame = canonical_frame(o.lattice.load());
  const ConceptLattice cl = all_concepts(frame);
  for (std::size_t k = 0; k < cl.concepts.size(); ++k)
    out << "concept " << k << ": extent {" << write_set(frame, cl.concepts[k].extent) << "} intent {"
        << write_set(frame, cl.concepts[k].intent) << "}\n";
  std::string covers;
  for (auto [x, y] : cl.lattice.order_pairs()) {
    bool cover = true;
    for (std::size_t z = 0; z < cl.lattice.size() && cover; ++z)
      if (z != x && z != y && cl.lattice.leq(x, z) && cl.lattice.leq(z, y)) cover = false;
    if (cover) covers += (covers.empty() ? " " : " , ") + std::to_string(x) + " " + std::to_string(y);
  }
  out << "covers:" << covers << "\n";
  return kHolds;
}

// ---- gen ---------------------------------------------------------------------------------

struct GenOptions {
  std::string what;
  std::size_t size_a = 3;
  std::size_t size_b = 3;
  std::string sig;
  double density = 0.5;
  std::uint64_t seed = 1;
  std::size_t p_vars = 1;
  std::size_t q_vars = 1;
  std::string lang = "modal";
  std::string sort = "1";
  std::size_t depth = 3;
  std::size_t count = 1;
  std::size_t vars = 2;
  std::string out_dir;
};

int cmd_gen(const GenOptions& o, std::ostream& out) {
  const Signature sig = parse_signature(o.sig);
  Rng rng(o.seed);
  if (o.what == "frame") {
    out << write_frame(random_frame(o.size_a, o.size_b, sig, o.density, rng));
  } else if (o.what == "model") {
    out << write_model(random_modal_model(random_frame(o.size_a, o.size_b, sig, o.density, rng), o.p_vars, o.q_vars, rng));
  } else if (o.what == "formula") {
    if (o.sort != "1" && o.sort != "d") throw Error("--sort must be 1 or d");
    const Sort sort = o.sort == "1" ? Sort::One : Sort::Del;
    for (std::size_t k = 0; k < o.count; ++k) {
      if (o.lang == "lattice") out << to_string(random_lattice_formula(sig, o.vars, o.depth, rng)) << "\n";
      else if (o.lang == "modal") out << to_string(random_modal_formula(sort, sig, o.p_vars, o.q_vars, o.depth, rng)) << "\n";
      else if (o.lang == "fol")
        out << to_string(random_fol_formula(sig, {}, o.p_vars, o.q_vars, o.depth, rng)) << "\n";
      else throw Error("unknown language '" + o.lang + "'");
    }
  } else if (o.what == "catalog") {
    if (o.out_dir.empty()) throw Error("gen catalog needs --out DIR");
    fs::create_directories(o.out_dir);
    for (const auto& e : catalog_expansions()) {
      const fs::path file = fs::path(o.out_dir) / (e.lattice + "-" + e.preset + ".lat");
      std::ofstream f(file);
      f << "# " << e.lattice << " with the " << e.preset << " operators\n" << write_lattice(e.expansion);
      if (!f) throw Error("cannot write '" + file.string() + "'");
      out << file.string() << "\n";
    }
  } else {
    throw Error("gen expects frame, model, formula or catalog");
  }
  return kHolds;
}

// ---- verify ------------------------------------------------------------------------------

struct VerifyOptions {
  std::string suite;
  VerifyParams params;
  std::size_t count = 0;
  std::string frames_dir;
};

int cmd_verify(VerifyOptions o, std::ostream& out, std::ostream& err) {
  if (o.count) o.params.count = o.count;
  if (!o.frames_dir.empty()) o.params.frames_dir = o.frames_dir;
  const auto start = std::chrono::steady_clock::now();
  const SuiteReport report = run_suite(o.suite, o.params);
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
  out << report.render();
  err << "time: " << elapsed.count() << "s\n";
  if (report.aborted) return kError;
  return report.passed() ? kHolds : kFails;
}

}  // namespace

Signature parse_signature(const std::string& text) {
  Signature sig;
  std::istringstream groups(text);
  for (std::string group; std::getline(groups, group, ',');) {
    std::istringstream words(group);
    std::vector<std::string> w;
    for (std::string word; words >> word;) w.push_back(word);
    if (w.empty()) continue;
    if (w.size() != 2) throw Error("signature entries are 'NAME SORTING', got '" + group + "'");
    sig.add(w[0], SortingType::parse(w[1]));
  }
  return sig;
}

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Polarity frames, sorted modal logic and translations", "polarity"};
  app.require_subcommand(1);

  EvalOptions eval;
  auto* c_eval = app.add_subcommand("eval", "Evaluate formulas in a model");
  c_eval->add_option("--model", eval.model, "Model file")->required();
  c_eval->add_option("--lang", eval.lang, "modal, lattice or fol");
  c_eval->add_option("--point", eval.point, "Evaluate at this point only");
  repeatable(c_eval->add_option("--assign", eval.assign, "First-order assignment NAME=POINT"));
  c_eval->add_flag("--close", eval.close, "Close non-stable lattice valuations");
  add_formula_input(c_eval, eval.input);

  EvalOptions extent;
  auto* c_extent = app.add_subcommand("extent", "Print the extent (and intent) of formulas");
  c_extent->add_option("--model", extent.model, "Model file")->required();
  c_extent->add_option("--lang", extent.lang, "modal or lattice");
  c_extent->add_flag("--close", extent.close, "Close non-stable lattice valuations");
  add_formula_input(c_extent, extent.input);

  TranslateOptions tr;
  auto* c_tr = app.add_subcommand("translate", "Translate lattice formulas into the sorted modal language");
  c_tr->add_option("--mode", tr.mode, "bullet or circle");
  c_tr->add_option("--asg", tr.asg, "Assignment file (p0 := beta)");
  c_tr->add_option("--sig", tr.sig, "Signature, e.g. 'R 1;11 , S d;1d'");
  c_tr->add_flag("--expand", tr.expand, "Print derived operators as primitives");
  add_formula_input(c_tr, tr.input);

  SttransOptions st;
  auto* c_st = app.add_subcommand("sttrans", "Standard translation of modal formulas");
  c_st->add_option("--sig", st.sig, "Signature");
  c_st->add_option("--var", st.var, "Free variable name");
  c_st->add_flag("--stability", st.stability, "Apply the stability transform to the result");
  c_st->add_flag("--prenex", st.prenex, "Apply the prenex stability transform to the result");
  add_formula_input(c_st, st.input);

  StableOptions sb;
  auto* c_sb = app.add_subcommand("stable", "Check stability of a modal or first-order formula");
  c_sb->add_option("--lang", sb.lang, "modal or fol");
  repeatable(c_sb->add_option("--frame", sb.frames, "Frame file"));
  repeatable(c_sb->add_option("--model", sb.models, "Model file"));
  c_sb->add_option("--frames", sb.frames_dir, "Directory of frames");
  c_sb->add_option("--catalog", sb.catalog, "Catalog operator preset supplying frames or models");
  c_sb->add_option("--var", sb.var, "Free variable of a first-order formula");
  c_sb->add_option("--sig", sb.sig, "Signature");
  c_sb->add_option("--seed", sb.seed, "Seed for catalog model valuations");
  add_formula_input(c_sb, sb.input);

  BisimOptions bi;
  auto* c_bi = app.add_subcommand("bisim", "Largest bisimulation, or check a candidate relation");
  c_bi->add_option("left", bi.left, "First model")->required();
  c_bi->add_option("right", bi.right, "Second model")->required();
  c_bi->add_option("--pairs", bi.pairs, "Candidate relation file (lines 'x y')");
  c_bi->add_flag("--explain", bi.explain, "Print distinguishing formulas for excluded pairs");

  LatticeSource canon;
  auto* c_canon = app.add_subcommand("canon", "Canonical frame of a finite lattice expansion");
  c_canon->add_option("lattice", canon.lattice_file, "Lattice file");
  c_canon->add_option("--catalog", canon.catalog, "Catalog lattice name");
  c_canon->add_option("--preset", canon.preset, "Catalog operator preset");

  ConceptsOptions co;
  auto* c_co = app.add_subcommand("concepts", "List the formal concepts of a frame");
  c_co->add_option("--frame", co.frame, "Frame file");
  c_co->add_option("--model", co.model, "Model file");
  c_co->add_option("--lattice", co.lattice.lattice_file, "Lattice file (uses its canonical frame)");
  c_co->add_option("--catalog", co.lattice.catalog, "Catalog lattice name");
  c_co->add_option("--preset", co.lattice.preset, "Catalog operator preset");

  GenOptions gen;
  auto* c_gen = app.add_subcommand("gen", "Generate random frames, models, formulas or the catalog files");
  c_gen->add_option("what", gen.what, "frame, model, formula or catalog")->required();
  c_gen->add_option("--size-a", gen.size_a, "Points of sort 1");
  c_gen->add_option("--size-b", gen.size_b, "Points of sort d");
  c_gen->add_option("--sig", gen.sig, "Signature");
  c_gen->add_option("--density", gen.density, "Probability of each pair or tuple");
  c_gen->add_option("--seed", gen.seed, "Random seed");
  c_gen->add_option("--pvars", gen.p_vars, "Number of P variables");
  c_gen->add_option("--qvars", gen.q_vars, "Number of Q variables");
  c_gen->add_option("--lang", gen.lang, "lattice, modal or fol");
  c_gen->add_option("--sort", gen.sort, "Sort of modal formulas (1 or d)");
  c_gen->add_option("--depth", gen.depth, "Depth bound");
  c_gen->add_option("--count", gen.count, "Number of formulas");
  c_gen->add_option("--vars", gen.vars, "Number of lattice variables");
  c_gen->add_option("--out", gen.out_dir, "Output directory for the catalog");

  VerifyOptions ve;
  auto* c_ve = app.add_subcommand("verify", "Run a verification suite");
  c_ve->add_option("suite", ve.suite, "Suite name")->required()->check(CLI::IsMember(suite_names()));
  c_ve->add_option("--seed", ve.params.seed, "Random seed");
  c_ve->add_option("--count", ve.count, "Number of random instances");
  c_ve->add_flag("--exhaustive", ve.params.exhaustive, "Enumerate all small frames");
  c_ve->add_option("--maxA", ve.params.max_a, "Largest carrier of sort 1");
  c_ve->add_option("--maxB", ve.params.max_b, "Largest carrier of sort d");
  c_ve->add_flag("--serial-only", ve.params.serial_only, "Sample serial frames only");
  c_ve->add_option("--frames", ve.frames_dir, "Directory of frame, model or lattice files");
  c_ve->add_option("--max-failures", ve.params.max_reported, "Failures reported in full");

  std::vector<std::string> argv_store{"polarity"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kHolds : kError;
  }

  try {
    if (c_eval->parsed()) return cmd_eval(eval, out);
    if (c_extent->parsed()) return cmd_extent(extent, out);
    if (c_tr->parsed()) return cmd_translate(tr, out);
    if (c_st->parsed()) return cmd_sttrans(st, out);
    if (c_sb->parsed()) return cmd_stable(sb, out);
    if (c_bi->parsed()) return cmd_bisim(bi, out);
    if (c_canon->parsed()) return cmd_canon(canon, out);
    if (c_co->parsed()) return cmd_concepts(co, out);
    if (c_gen->parsed()) return cmd_gen(gen, out);
    if (c_ve->parsed()) return cmd_verify(ve, out, err);
  } catch (const ResourceError& e) {
    err << "error: resource cap exceeded: " << e.what() << "\n";
    return kError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kError;
  }
  return kError;
}

}  // namespace polarity
