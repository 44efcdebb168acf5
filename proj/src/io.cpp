#include "polarity/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "polarity/error.hpp"
#include "polarity/syntax.hpp"

namespace polarity {

namespace {

struct Line {
  std::size_t number;
  std::string text;
};

struct Word {
  std::string text;
  std::size_t column;
};

std::string trim_right(std::string s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  return s;
}

/// Strips comments and blank lines and joins lines ending in `,` with their successor.
std::vector<Line> logical_lines(std::string_view text) {
  std::vector<Line> out;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t number = 0;
  bool continuing = false;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    raw = trim_right(raw);
    if (raw.find_first_not_of(" \t\r") == std::string::npos) {
      continue;
    }
    if (continuing)
      out.back().text += " " + raw;
    else
      out.push_back({number, raw});
    continuing = !raw.empty() && raw.back() == ',';
  }
  return out;
}

std::vector<Word> words(const std::string& s, std::size_t begin = 0, std::size_t end = std::string::npos) {
  std::vector<Word> out;
  end = std::min(end, s.size());
  std::size_t i = begin;
  while (i < end) {
    while (i < end && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i >= end) break;
    std::size_t j = i;
    while (j < end && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    out.push_back({s.substr(i, j - i), i + 1});
    i = j;
  }
  return out;
}

/// Comma-separated groups of words; an all-blank list yields no groups.
std::vector<std::vector<Word>> groups(const Line& line, std::size_t begin) {
  std::vector<std::vector<Word>> out;
  const std::string& s = line.text;
  if (words(s, begin).empty()) return out;
  std::size_t start = begin;
  while (true) {
    std::size_t comma = s.find(',', start);
    std::size_t stop = comma == std::string::npos ? s.size() : comma;
    auto g = words(s, start, stop);
    if (g.empty()) throw ParseError(line.number, start + 1, "empty entry in a comma-separated list");
    out.push_back(std::move(g));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

[[noreturn]] void fail(const Line& line, std::size_t column, const std::string& msg) {
  throw ParseError(line.number, column, msg);
}

std::size_t colon_after(const Line& line, std::size_t from, const char* what) {
  std::size_t c = line.text.find(':', from);
  if (c == std::string::npos) fail(line, line.text.size() + 1, std::string("expected ':' in ") + what);
  return c;
}

/// Re-raises construction errors as located parse errors.
template <typename F>
auto at_line(const Line& line, std::size_t column, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const ParseError&) {
    throw;
  } catch (const NormalityError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(line.number, column, e.what());
  }
}

// ---- frames and models ------------------------------------------------------------

struct FrameBuilder {
  std::vector<std::string> a, b;
  std::map<std::string, std::size_t, std::less<>> ia, ib;
  std::vector<std::pair<std::size_t, std::size_t>> incidence;
  std::vector<SortedRelation> relations;
  bool have_sorts = false;
  bool have_incidence = false;

  std::size_t point(const Line& line, const Word& w, Sort s) const {
    const auto& idx = s == Sort::One ? ia : ib;
    auto it = idx.find(w.text);
    if (it != idx.end()) return it->second;
    const auto& other = s == Sort::One ? ib : ia;
    if (other.count(w.text))
      fail(line, w.column, "point '" + w.text + "' has sort " + sort_char(opposite(s)) + ", expected sort " + sort_char(s));
    fail(line, w.column, "unknown point '" + w.text + "'");
  }

  bool accept(const Line& line) {
    auto ws = words(line.text);
    const std::string& key = ws[0].text;
    if (key == "sorts") {
      if (have_sorts) fail(line, ws[0].column, "duplicate 'sorts' line");
      std::vector<std::string>* target = nullptr;
      for (std::size_t k = 1; k < ws.size(); ++k) {
        if (ws[k].text == "A:") {
          target = &a;
        } else if (ws[k].text == "B:") {
          target = &b;
        } else if (!target) {
          fail(line, ws[k].column, "expected 'A:' or 'B:'");
        } else {
          if (ws[k].text.find_first_of(",:") != std::string::npos)
            fail(line, ws[k].column, "point names may not contain ',' or ':'");
          target->push_back(ws[k].text);
        }
      }
      for (std::size_t i = 0; i < a.size(); ++i)
        if (!ia.emplace(a[i], i).second) fail(line, 1, "duplicate point '" + a[i] + "'");
      for (std::size_t i = 0; i < b.size(); ++i)
        if (!ib.emplace(b[i], i).second || ia.count(b[i])) fail(line, 1, "duplicate point '" + b[i] + "'");
      if (a.empty() || b.empty()) fail(line, 1, "both sorts must be non-empty");
      have_sorts = true;
      return true;
    }
    if (key == "I:" || key == "I") {
      require_sorts(line);
      if (have_incidence) fail(line, 1, "duplicate 'I' line");
      for (const auto& g : groups(line, colon_after(line, 0, "the incidence line") + 1)) {
        if (g.size() != 2) fail(line, g[0].column, "incidence entries are pairs 'a b'");
        incidence.emplace_back(point(line, g[0], Sort::One), point(line, g[1], Sort::Del));
      }
      have_incidence = true;
      return true;
    }
    if (key == "rel") {
      require_sorts(line);
      std::size_t colon = colon_after(line, 0, "a relation line");
      auto head = words(line.text, 0, colon);
      if (head.size() != 4 || head[2].text != "sort") fail(line, 1, "expected 'rel NAME sort TYPE : tuples'");
      SortingType sorting = at_line(line, head[3].column, [&] { return SortingType::parse(head[3].text); });
      SortedRelation rel{head[1].text, sorting, {}};
      for (const auto& g : groups(line, colon + 1)) {
        if (g.size() != sorting.arity() + 1)
          fail(line, g[0].column, "tuples of '" + rel.name + "' have " + std::to_string(sorting.arity() + 1) + " points");
        Tuple t;
        for (std::size_t j = 0; j < g.size(); ++j)
          t.push_back(point(line, g[j], j == 0 ? sorting.output : sorting.inputs[j - 1]));
        rel.tuples.push_back(std::move(t));
      }
      for (const auto& r : relations)
        if (r.name == rel.name) fail(line, head[1].column, "duplicate relation '" + rel.name + "'");
      at_line(line, head[1].column, [&] {
        Signature probe;
        probe.add(rel.name, rel.sorting);
        return 0;
      });
      relations.push_back(std::move(rel));
      return true;
    }
    return false;
  }

  void require_sorts(const Line& line) const {
    if (!have_sorts) fail(line, 1, "the 'sorts' line must come first");
  }

  SortedFrame build(std::size_t last_line) const {
    if (!have_sorts) throw ParseError(last_line, 1, "missing 'sorts' line");
    try {
      return SortedFrame(a, b, incidence, relations);
    } catch (const Error& e) {
      throw ParseError(last_line, 1, e.what());
    }
  }
};

std::optional<std::pair<Sort, std::size_t>> variable_name(const std::string& s) {
  if (s.size() < 2 || (s[0] != 'P' && s[0] != 'Q')) return std::nullopt;
  for (std::size_t i = 1; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return std::nullopt;
  if (s.size() > 10) return std::nullopt;
  return std::pair{s[0] == 'P' ? Sort::One : Sort::Del, static_cast<std::size_t>(std::stoul(s.substr(1)))};
}

}  // namespace

SortedFrame read_frame(std::string_view text) {
  FrameBuilder fb;
  std::size_t last = 1;
  for (const auto& line : logical_lines(text)) {
    last = line.number;
    if (!fb.accept(line)) fail(line, 1, "unexpected line in a frame file");
  }
  return fb.build(last);
}

ModalModel read_model(std::string_view text) {
  FrameBuilder fb;
  std::vector<std::pair<Line, std::pair<Sort, std::size_t>>> vals;
  std::size_t last = 1;
  auto lines = logical_lines(text);
  for (const auto& line : lines) {
    last = line.number;
    if (fb.accept(line)) continue;
    auto ws = words(line.text);
    if (ws[0].text != "val") fail(line, 1, "unexpected line in a model file");
    fb.require_sorts(line);
    std::size_t colon = colon_after(line, 0, "a valuation line");
    auto head = words(line.text, 0, colon);
    if (head.size() != 2) fail(line, 1, "expected 'val P<i>: points' or 'val Q<i>: points'");
    auto var = variable_name(head[1].text);
    if (!var) fail(line, head[1].column, "expected a variable P<i> or Q<i>");
    vals.push_back({line, *var});
  }
  SortedFrame frame = fb.build(last);
  ModalValuation v;
  for (const auto& [line, var] : vals) {
    auto [sort, index] = var;
    PointSet set(sort, frame.size(sort));
    for (const auto& w : words(line.text, line.text.find(':') + 1)) set.insert(fb.point(line, w, sort));
    if (!v.of(sort).emplace(index, set).second) fail(line, 1, "duplicate valuation line");
  }
  return ModalModel(std::move(frame), std::move(v));
}

FiniteLatticeExpansion read_lattice(std::string_view text) {
  std::vector<std::string> elems;
  std::map<std::string, std::size_t, std::less<>> index;
  std::vector<std::pair<std::size_t, std::size_t>> leq;
  std::vector<std::pair<Line, LatticeOperator>> ops;
  auto lines = logical_lines(text);
  auto element = [&](const Line& line, const Word& w) {
    auto it = index.find(w.text);
    if (it == index.end()) fail(line, w.column, "unknown lattice element '" + w.text + "'");
    return it->second;
  };
  std::optional<FiniteLattice> lattice;
  for (const auto& line : lines) {
    auto ws = words(line.text);
    const std::string& key = ws[0].text;
    if (key == "elems") {
      if (!elems.empty()) fail(line, 1, "duplicate 'elems' line");
      for (std::size_t k = 1; k < ws.size(); ++k) {
        if (!index.emplace(ws[k].text, elems.size()).second) fail(line, ws[k].column, "duplicate element");
        elems.push_back(ws[k].text);
      }
      if (elems.empty()) fail(line, 1, "a lattice needs at least one element");
    } else if (key == "leq:" || key == "leq") {
      if (elems.empty()) fail(line, 1, "the 'elems' line must come first");
      for (const auto& g : groups(line, colon_after(line, 0, "the order line") + 1)) {
        if (g.size() != 2) fail(line, g[0].column, "order entries are pairs 'x y' meaning x <= y");
        leq.emplace_back(element(line, g[0]), element(line, g[1]));
      }
    } else if (key == "op") {
      if (elems.empty()) fail(line, 1, "the 'elems' line must come first");
      if (!lattice) lattice = at_line(line, 1, [&] { return FiniteLattice(elems, leq); });
      std::size_t colon = colon_after(line, 0, "an operator line");
      auto head = words(line.text, 0, colon);
      if (head.size() != 5 || head[2].text != "type" || head[4].text != "table")
        fail(line, 1, "expected 'op NAME type TYPE table: rows'");
      DistributionType type = at_line(line, head[3].column, [&] { return DistributionType::parse(head[3].text); });
      LatticeOperator op{head[1].text, type, {}};
      const std::size_t n = type.arity();
      std::size_t total = 1;
      for (std::size_t j = 0; j < n; ++j) total *= elems.size();
      std::vector<long> table(total, -1);
      for (const auto& g : groups(line, colon + 1)) {
        if (g.size() != n + 1) fail(line, g[0].column, "table rows have " + std::to_string(n + 1) + " entries");
        std::size_t idx = 0, scale = 1;
        for (std::size_t j = 0; j < n; ++j) {
          idx += element(line, g[j]) * scale;
          scale *= elems.size();
        }
        if (table[idx] != -1) fail(line, g[0].column, "duplicate table row");
        table[idx] = static_cast<long>(element(line, g[n]));
      }
      for (std::size_t idx = 0; idx < total; ++idx) {
        if (table[idx] != -1) continue;
        std::string args;
        for (std::size_t j = 0, rest = idx; j < n; ++j, rest /= elems.size()) args += (j ? " " : "") + elems[rest % elems.size()];
        fail(line, 1, "operator table of '" + op.name + "' has no row for (" + args + ")");
      }
      for (long r : table) op.table.push_back(static_cast<std::size_t>(r));
      ops.push_back({line, std::move(op)});
    } else {
      fail(line, 1, "unexpected line in a lattice file");
    }
  }
  if (elems.empty()) throw ParseError(1, 1, "missing 'elems' line");
  if (!lattice) lattice = at_line(lines.back(), 1, [&] { return FiniteLattice(elems, leq); });
  std::vector<LatticeOperator> list;
  for (auto& [line, op] : ops) list.push_back(std::move(op));
  return FiniteLatticeExpansion(std::move(*lattice), std::move(list));
}

TranslationAssignment read_assignment(std::string_view text, const Signature& signature) {
  TranslationAssignment out;
  for (const auto& line : logical_lines(text)) {
    std::size_t def = line.text.find(":=");
    if (def == std::string::npos) fail(line, 1, "expected 'p<i> := formula'");
    auto head = words(line.text, 0, def);
    if (head.size() != 1 || head[0].text.size() < 2 || head[0].text[0] != 'p' ||
        head[0].text.find_first_not_of("0123456789", 1) != std::string::npos || head[0].text.size() > 10)
      fail(line, 1, "expected a lattice variable p<i> before ':='");
    std::size_t index = std::stoul(head[0].text.substr(1));
    const std::string body = line.text.substr(def + 2);
    ModalFormula f = [&] {
      try {
        return parse_modal(body, signature, line.number);
      } catch (const ParseError& e) {
        throw ParseError(line.number, e.column() + def + 2, e.what());
      }
    }();
    if (f.sort() != Sort::Del) fail(line, def + 3, "assignment values must be formulas of sort d");
    if (!out.emplace(index, f).second) fail(line, 1, "duplicate assignment for " + head[0].text);
  }
  return out;
}

FormulaFile read_formula_file(std::string_view text) {
  FormulaFile out;
  for (const auto& line : logical_lines(text)) {
    auto ws = words(line.text);
    const std::string& key = ws[0].text;
    if (key == "sig:" || key == "sig") {
      for (const auto& g : groups(line, colon_after(line, 0, "a signature line") + 1)) {
        if (g.size() != 2) fail(line, g[0].column, "signature entries are 'NAME TYPE'");
        at_line(line, g[0].column, [&] {
          out.signature.add(g[0].text, SortingType::parse(g[1].text));
          return 0;
        });
      }
    } else if (key == "rel") {
      if (ws.size() != 4 || ws[2].text != "sort") fail(line, 1, "expected 'rel NAME sort TYPE'");
      at_line(line, ws[1].column, [&] {
        out.signature.add(ws[1].text, SortingType::parse(ws[3].text));
        return 0;
      });
    } else if (key == "var") {
      std::size_t colon = colon_after(line, 0, "a variable declaration");
      auto names = words(line.text, 3, colon);
      auto sort = words(line.text, colon + 1);
      if (names.empty() || sort.size() != 1) fail(line, 1, "expected 'var NAME.. : 1|d|any'");
      VarSort vs = sort[0].text == "1" ? VarSort::One
                   : sort[0].text == "d" ? VarSort::Del
                   : sort[0].text == "any" ? VarSort::Any
                                            : (fail(line, sort[0].column, "unknown sort '" + sort[0].text + "'"), VarSort::Any);
      for (const auto& n : names) out.variables[n.text] = vs;
    } else {
      out.formulas.emplace_back(line.number, line.text);
    }
  }
  return out;
}

// ---- writers ------------------------------------------------------------------------

std::string write_set(const SortedFrame& frame, const PointSet& set) {
  std::string out;
  set.for_each([&](std::size_t i) {
    if (!out.empty()) out += ' ';
    out += frame.name(set.sort(), i);
  });
  return out;
}

std::string write_frame(const SortedFrame& frame) {
  std::string out = "sorts A:";
  for (const auto& n : frame.names(Sort::One)) out += " " + n;
  out += "  B:";
  for (const auto& n : frame.names(Sort::Del)) out += " " + n;
  out += "\nI:";
  bool first = true;
  for (auto [a, b] : frame.incidence_pairs()) {
    out += (first ? " " : " , ") + frame.name(Sort::One, a) + " " + frame.name(Sort::Del, b);
    first = false;
  }
  out += "\n";
  for (const auto& rel : frame.relations()) {
    out += "rel " + rel.name + " sort " + rel.sorting.to_string() + " :";
    first = true;
    for (const auto& t : rel.tuples) {
      out += first ? " " : " , ";
      first = false;
      for (std::size_t j = 0; j < t.size(); ++j)
        out += (j ? " " : "") + frame.name(j == 0 ? rel.sorting.output : rel.sorting.inputs[j - 1], t[j]);
    }
    out += "\n";
  }
  return out;
}

std::string write_model(const ModalModel& model) {
  std::string out = write_frame(model.frame);
  for (Sort s : {Sort::One, Sort::Del})
    for (const auto& [i, set] : model.valuation.of(s)) {
      std::string names = write_set(model.frame, set);
      out += std::string("val ") + (s == Sort::One ? "P" : "Q") + std::to_string(i) + ":" + (names.empty() ? "" : " ") +
             names + "\n";
    }
  return out;
}

std::string write_lattice(const FiniteLatticeExpansion& expansion) {
  const FiniteLattice& l = expansion.lattice();
  std::string out = "elems";
  for (const auto& n : l.names()) out += " " + n;
  out += "\nleq:";
  bool first = true;
  for (auto [x, y] : l.order_pairs()) {
    bool cover = true;
    for (std::size_t z = 0; z < l.size() && cover; ++z)
      if (z != x && z != y && l.leq(x, z) && l.leq(z, y)) cover = false;
    if (!cover) continue;
    out += (first ? " " : " , ") + l.name(x) + " " + l.name(y);
    first = false;
  }
  out += "\n";
  for (const auto& op : expansion.operators()) {
    out += "op " + op.name + " type " + op.type.to_string() + " table:";
    const std::size_t n = op.type.arity();
    for (std::size_t idx = 0; idx < op.table.size(); ++idx) {
      out += idx ? " ," : "";
      if (idx && idx % l.size() == 0) out += "\n ";
      for (std::size_t j = 0, rest = idx; j < n; ++j, rest /= l.size()) out += " " + l.name(rest % l.size());
      out += " " + l.name(op.table[idx]);
    }
    out += "\n";
  }
  return out;
}

std::string write_assignment(const TranslationAssignment& asg) {
  std::string out;
  for (const auto& [i, beta] : asg) out += "p" + std::to_string(i) + " := " + to_string(beta) + "\n";
  return out;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace polarity
