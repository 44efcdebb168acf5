#include "polarity/syntax.hpp"

#include <cctype>
#include <optional>

#include "polarity/error.hpp"

namespace polarity {

namespace {

// ---- lexer --------------------------------------------------------------------

enum class Tok { Ident, Punct, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t column;
};

std::vector<Token> lex(std::string_view text, std::size_t line) {
  static const char* const puncts[] = {"->", "/\\", "\\/", "(", ")", ",", ".", "~", "&", "|", "=", "[", "]", "<", ">"};
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    unsigned char c = static_cast<unsigned char>(text[i]);
    if (std::isspace(c)) {
      ++i;
      continue;
    }
    if (c == '#') break;
    if (std::isalnum(c) || c == '_') {
      std::size_t j = i;
      while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) ++j;
      out.push_back({Tok::Ident, std::string(text.substr(i, j - i)), i + 1});
      i = j;
      continue;
    }
    bool matched = false;
    for (const char* p : puncts) {
      std::string_view ps(p);
      if (text.substr(i, ps.size()) == ps) {
        out.push_back({Tok::Punct, std::string(ps), i + 1});
        i += ps.size();
        matched = true;
        break;
      }
    }
    if (!matched) throw ParseError(line, i + 1, "unexpected character '" + std::string(1, text[i]) + "'");
  }
  out.push_back({Tok::End, "", text.size() + 1});
  return out;
}

/// Matches P<digits>, Q<digits>, p<digits>.
std::optional<std::size_t> indexed(const std::string& s, char prefix) {
  if (s.size() < 2 || s[0] != prefix) return std::nullopt;
  for (std::size_t i = 1; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return std::nullopt;
  if (s.size() > 2 && s[1] == '0') return std::nullopt;
  if (s.size() > 10) return std::nullopt;
  return static_cast<std::size_t>(std::stoul(s.substr(1)));
}

class Cursor {
 public:
  Cursor(std::string_view text, std::size_t line) : tokens_(lex(text, line)), line_(line) {}

  const Token& peek(std::size_t ahead = 0) const { return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)]; }
  bool at_punct(std::string_view p) const { return peek().kind == Tok::Punct && peek().text == p; }
  bool at_end() const { return peek().kind == Tok::End; }
  Token take() {
    Token t = peek();
    if (pos_ < tokens_.size() - 1) ++pos_;
    return t;
  }
  bool accept(std::string_view p) {
    if (!at_punct(p)) return false;
    take();
    return true;
  }
  void expect(std::string_view p) {
    if (!accept(p)) fail(peek(), "expected '" + std::string(p) + "'");
  }
  std::string expect_ident(const char* what) {
    if (peek().kind != Tok::Ident) fail(peek(), std::string("expected ") + what);
    return take().text;
  }
  void expect_end() {
    if (!at_end()) fail(peek(), "unexpected trailing input");
  }
  [[noreturn]] void fail(const Token& t, const std::string& msg) const {
    std::string where = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
    throw ParseError(line_, t.column, msg + " at " + where);
  }
  /// Runs `build`, converting construction errors into located parse errors.
  template <typename F>
  auto located(const Token& t, F&& build) -> decltype(build()) {
    try {
      return build();
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(line_, t.column, e.what());
    }
  }

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::size_t line_;
};

const SortingType& lookup(Cursor& c, const Token& t, const Signature& signature) {
  const SortingType* s = signature.find(t.text);
  if (!s) c.fail(t, "unknown operator or relation '" + t.text + "'");
  return *s;
}

// ---- lattice parser -----------------------------------------------------------

class LatticeParser {
 public:
  LatticeParser(Cursor& c, const Signature& sig) : c_(c), sig_(sig) {}

  LatticeFormula disj() {
    LatticeFormula f = conj();
    while (c_.at_punct("\\/")) {
      c_.take();
      f = LatticeFormula::disj(f, conj());
    }
    return f;
  }

 private:
  LatticeFormula conj() {
    LatticeFormula f = atom();
    while (c_.at_punct("/\\")) {
      c_.take();
      f = LatticeFormula::conj(f, atom());
    }
    return f;
  }

  LatticeFormula atom() {
    if (c_.accept("(")) {
      LatticeFormula f = disj();
      c_.expect(")");
      return f;
    }
    if (c_.peek().kind != Tok::Ident) c_.fail(c_.peek(), "expected a lattice formula");
    Token t = c_.take();
    if (t.text == "top") return LatticeFormula::top();
    if (t.text == "bot") return LatticeFormula::bot();
    if (auto i = indexed(t.text, 'p')) return LatticeFormula::var(*i);
    const SortingType& sorting = lookup(c_, t, sig_);
    c_.expect("(");
    std::vector<LatticeFormula> args{disj()};
    while (c_.accept(",")) args.push_back(disj());
    c_.expect(")");
    return c_.located(t, [&] { return LatticeFormula::op(t.text, distribution_of(sorting), args); });
  }

  Cursor& c_;
  const Signature& sig_;
};

// ---- modal parser -------------------------------------------------------------

class ModalParser {
 public:
  ModalParser(Cursor& c, const Signature& sig) : c_(c), sig_(sig) {}

  ModalFormula implication() {
    ModalFormula f = disj();
    if (c_.at_punct("->")) {
      Token t = c_.take();
      ModalFormula rhs = implication();
      return c_.located(t, [&] { return ModalFormula::implies(f, rhs); });
    }
    return f;
  }

 private:
  ModalFormula disj() {
    ModalFormula f = conj();
    while (c_.at_punct("|")) {
      Token t = c_.take();
      ModalFormula rhs = conj();
      f = c_.located(t, [&] { return ModalFormula::disj(f, rhs); });
    }
    return f;
  }

  ModalFormula conj() {
    ModalFormula f = unary();
    while (c_.at_punct("&")) {
      Token t = c_.take();
      ModalFormula rhs = unary();
      f = c_.located(t, [&] { return ModalFormula::conj(f, rhs); });
    }
    return f;
  }

  std::vector<ModalFormula> arg_list() {
    c_.expect("(");
    std::vector<ModalFormula> args{implication()};
    while (c_.accept(",")) args.push_back(implication());
    c_.expect(")");
    return args;
  }

  ModalFormula unary() {
    if (c_.at_punct("~")) {
      c_.take();
      return ModalFormula::negation(unary());
    }
    if (c_.at_punct("[") || c_.at_punct("<")) {
      Token open = c_.take();
      const bool box = open.text == "[";
      Token name = c_.peek();
      c_.expect_ident("a modality name");
      c_.expect(box ? "]" : ">");
      if (name.text == "b" || name.text == "d") {
        ModalFormula arg = unary();
        return c_.located(open, [&] {
          if (name.text == "b") return box ? ModalFormula::box_b(arg) : ModalFormula::dia_b(arg);
          return box ? ModalFormula::box_d(arg) : ModalFormula::dia_d(arg);
        });
      }
      const SortingType& sorting = lookup(c_, name, sig_);
      std::vector<ModalFormula> args = arg_list();
      return c_.located(name, [&] {
        return box ? ModalFormula::box(name.text, sorting, args) : ModalFormula::diamond(name.text, sorting, args);
      });
    }
    if (c_.accept("(")) {
      ModalFormula f = implication();
      c_.expect(")");
      return f;
    }
    if (c_.peek().kind != Tok::Ident) c_.fail(c_.peek(), "expected a modal formula");
    Token t = c_.take();
    if (t.text == "top") return ModalFormula::top(Sort::One);
    if (t.text == "bot") return ModalFormula::bot(Sort::One);
    if (t.text == "tt") return ModalFormula::top(Sort::Del);
    if (t.text == "ff") return ModalFormula::bot(Sort::Del);
    if (auto i = indexed(t.text, 'P')) return ModalFormula::var(Sort::One, *i);
    if (auto i = indexed(t.text, 'Q')) return ModalFormula::var(Sort::Del, *i);
    c_.fail(t, "expected a modal formula");
  }

  Cursor& c_;
  const Signature& sig_;
};

// ---- first-order parser -------------------------------------------------------

struct Binder {
  const char* keyword;
  bool universal;
  VarSort sort;
};

constexpr Binder binders[] = {
    {"all1", true, VarSort::One},  {"alld", true, VarSort::Del},  {"all", true, VarSort::Any},
    {"ex1", false, VarSort::One},  {"exd", false, VarSort::Del},  {"ex", false, VarSort::Any},
};

const Binder* find_binder(const std::string& s) {
  for (const auto& b : binders)
    if (s == b.keyword) return &b;
  return nullptr;
}

class FolParser {
 public:
  FolParser(Cursor& c, const Signature& sig, const std::map<std::string, VarSort, std::less<>>& free)
      : c_(c), sig_(sig) {
    for (const auto& [name, sort] : free) scope_.push_back({name, sort});
  }

  FolFormula implication() {
    FolFormula f = disj();
    if (c_.accept("->")) return FolFormula::implies(f, implication());
    return f;
  }

 private:
  FolFormula disj() {
    FolFormula f = conj();
    while (c_.accept("|")) f = FolFormula::disj(f, conj());
    return f;
  }

  FolFormula conj() {
    FolFormula f = unary();
    while (c_.accept("&")) f = FolFormula::conj(f, unary());
    return f;
  }

  FolVar variable() {
    Token t = c_.peek();
    std::string name = c_.expect_ident("a variable");
    for (auto it = scope_.rbegin(); it != scope_.rend(); ++it)
      if (it->name == name) return *it;
    c_.fail(t, "undeclared variable '" + name + "'");
  }

  FolFormula unary() {
    if (c_.accept("~")) return FolFormula::negation(unary());
    if (c_.accept("(")) {
      FolFormula f = implication();
      c_.expect(")");
      return f;
    }
    if (c_.peek().kind != Tok::Ident) c_.fail(c_.peek(), "expected a first-order formula");
    if (const Binder* b = find_binder(c_.peek().text)) {
      c_.take();
      Token vt = c_.peek();
      std::string name = c_.expect_ident("a bound variable");
      if (is_reserved_symbol(name) || find_binder(name)) c_.fail(vt, "reserved name used as a variable");
      c_.expect(".");
      FolVar x{name, b->sort};
      scope_.push_back(x);
      FolFormula body = implication();
      scope_.pop_back();
      return b->universal ? FolFormula::forall(x, body) : FolFormula::exists(x, body);
    }
    Token t = c_.take();
    if (c_.at_punct("=")) {
      // Token `t` was a variable.
      FolVar lhs = resolve(t);
      c_.take();
      FolVar rhs = variable();
      return c_.located(t, [&] { return FolFormula::eq(lhs, rhs); });
    }
    c_.expect("(");
    std::vector<FolVar> vars{variable()};
    while (c_.accept(",")) vars.push_back(variable());
    c_.expect(")");
    return c_.located(t, [&] {
      auto one = [&](const char* what) {
        if (vars.size() != 1) throw SortError(std::string(what) + " takes exactly one argument");
        return vars[0];
      };
      if (t.text == "I") return FolFormula::rel("I", {}, vars);
      if (t.text == "U1") return FolFormula::sort_pred(Sort::One, one("U1"));
      if (t.text == "Ud") return FolFormula::sort_pred(Sort::Del, one("Ud"));
      if (auto i = indexed(t.text, 'P')) return FolFormula::pred(Sort::One, *i, one("P"));
      if (auto i = indexed(t.text, 'Q')) return FolFormula::pred(Sort::Del, *i, one("Q"));
      const SortingType* s = sig_.find(t.text);
      if (!s) throw UnknownNameError("unknown relation '" + t.text + "'");
      return FolFormula::rel(t.text, *s, vars);
    });
  }

  FolVar resolve(const Token& t) {
    for (auto it = scope_.rbegin(); it != scope_.rend(); ++it)
      if (it->name == t.text) return *it;
    c_.fail(t, "undeclared variable '" + t.text + "'");
  }

  Cursor& c_;
  const Signature& sig_;
  std::vector<FolVar> scope_;
};

// ---- printers -----------------------------------------------------------------

// Binding strength: implication 1, disjunction 2, conjunction 3, prefix/atoms 4.
int lattice_prec(const LatticeFormula& f) {
  switch (f.kind()) {
    case LatticeFormula::Kind::Or:
      return 2;
    case LatticeFormula::Kind::And:
      return 3;
    default:
      return 4;
  }
}

void print_lattice(const LatticeFormula& f, std::string& out) {
  using K = LatticeFormula::Kind;
  auto child = [&](const LatticeFormula& c, int min_prec) {
    bool paren = lattice_prec(c) < min_prec;
    if (paren) out += '(';
    print_lattice(c, out);
    if (paren) out += ')';
  };
  switch (f.kind()) {
    case K::Var:
      out += "p" + std::to_string(f.index());
      return;
    case K::Top:
      out += "top";
      return;
    case K::Bot:
      out += "bot";
      return;
    case K::And:
    case K::Or: {
      int p = lattice_prec(f);
      child(f.lhs(), p);
      out += f.kind() == K::And ? " /\\ " : " \\/ ";
      child(f.rhs(), p + 1);
      return;
    }
    case K::Op:
      out += f.name() + "(";
      for (std::size_t j = 0; j < f.args().size(); ++j) {
        if (j) out += ", ";
        print_lattice(f.args()[j], out);
      }
      out += ")";
      return;
  }
}

int modal_prec(const ModalFormula& f) {
  switch (f.kind()) {
    case ModalFormula::Kind::Implies:
      return 1;
    case ModalFormula::Kind::Or:
      return 2;
    case ModalFormula::Kind::And:
      return 3;
    default:
      return 4;
  }
}

void print_modal(const ModalFormula& f, std::string& out) {
  using K = ModalFormula::Kind;
  auto child = [&](const ModalFormula& c, int min_prec) {
    bool paren = modal_prec(c) < min_prec;
    if (paren) out += '(';
    print_modal(c, out);
    if (paren) out += ')';
  };
  auto list = [&](const std::vector<ModalFormula>& args) {
    out += "(";
    for (std::size_t j = 0; j < args.size(); ++j) {
      if (j) out += ", ";
      print_modal(args[j], out);
    }
    out += ")";
  };
  switch (f.kind()) {
    case K::Var:
      out += (f.sort() == Sort::One ? "P" : "Q") + std::to_string(f.index());
      return;
    case K::Top:
      out += f.sort() == Sort::One ? "top" : "tt";
      return;
    case K::Bot:
      out += f.sort() == Sort::One ? "bot" : "ff";
      return;
    case K::Not:
      out += "~";
      child(f.arg(), 4);
      return;
    case K::And:
    case K::Or:
      child(f.lhs(), modal_prec(f));
      out += f.kind() == K::And ? " & " : " | ";
      child(f.rhs(), modal_prec(f) + 1);
      return;
    case K::Implies:
      child(f.lhs(), 2);
      out += " -> ";
      child(f.rhs(), 1);
      return;
    case K::BoxB:
      out += "[b] ";
      child(f.arg(), 4);
      return;
    case K::BoxD:
      out += "[d] ";
      child(f.arg(), 4);
      return;
    case K::DiaB:
      out += "<b> ";
      child(f.arg(), 4);
      return;
    case K::DiaD:
      out += "<d> ";
      child(f.arg(), 4);
      return;
    case K::Diamond:
      out += "<" + f.name() + ">";
      list(f.args());
      return;
    case K::Box:
      out += "[" + f.name() + "]";
      list(f.args());
      return;
  }
}

int fol_prec(const FolFormula& f) {
  switch (f.kind()) {
    case FolFormula::Kind::Implies:
      return 1;
    case FolFormula::Kind::Or:
      return 2;
    case FolFormula::Kind::And:
      return 3;
    case FolFormula::Kind::Forall:
    case FolFormula::Kind::Exists:
      return 0;
    default:
      return 4;
  }
}

void print_fol(const FolFormula& f, std::string& out) {
  using K = FolFormula::Kind;
  auto child = [&](const FolFormula& c, int min_prec) {
    bool paren = fol_prec(c) < min_prec;
    if (paren) out += '(';
    print_fol(c, out);
    if (paren) out += ')';
  };
  auto vars = [&] {
    out += "(";
    for (std::size_t j = 0; j < f.vars().size(); ++j) {
      if (j) out += ", ";
      out += f.vars()[j].name;
    }
    out += ")";
  };
  switch (f.kind()) {
    case K::Eq:
      out += f.vars()[0].name + " = " + f.vars()[1].name;
      return;
    case K::Rel:
      out += f.name();
      vars();
      return;
    case K::Pred:
      out += (f.pred_sort() == Sort::One ? "P" : "Q") + std::to_string(f.index());
      vars();
      return;
    case K::SortPred:
      out += f.pred_sort() == Sort::One ? "U1" : "Ud";
      vars();
      return;
    case K::Not:
      out += "~";
      child(f.arg(), 4);
      return;
    case K::And:
    case K::Or:
      child(f.lhs(), fol_prec(f));
      out += f.kind() == K::And ? " & " : " | ";
      child(f.rhs(), fol_prec(f) + 1);
      return;
    case K::Implies:
      child(f.lhs(), 2);
      out += " -> ";
      child(f.rhs(), 1);
      return;
    case K::Forall:
    case K::Exists: {
      const FolVar& x = f.bound();
      out += f.kind() == K::Forall ? "all" : "ex";
      if (x.sort == VarSort::One) out += "1";
      if (x.sort == VarSort::Del) out += "d";
      out += " " + x.name + " . ";
      print_fol(f.body(), out);
      return;
    }
  }
}

}  // namespace

LatticeFormula parse_lattice(std::string_view text, const Signature& signature, std::size_t line) {
  Cursor c(text, line);
  LatticeFormula f = LatticeParser(c, signature).disj();
  c.expect_end();
  return f;
}

ModalFormula parse_modal(std::string_view text, const Signature& signature, std::size_t line) {
  Cursor c(text, line);
  ModalFormula f = ModalParser(c, signature).implication();
  c.expect_end();
  return f;
}

FolFormula parse_fol(std::string_view text, const Signature& signature,
                     const std::map<std::string, VarSort, std::less<>>& free, std::size_t line) {
  Cursor c(text, line);
  FolFormula f = FolParser(c, signature, free).implication();
  c.expect_end();
  return f;
}

std::string to_string(const LatticeFormula& f) {
  std::string out;
  print_lattice(f, out);
  return out;
}

std::string to_string(const ModalFormula& f, const PrintOptions& options) {
  std::string out;
  print_modal(options.expand_sugar ? expand_sugar(f) : f, out);
  return out;
}

std::string to_string(const FolFormula& f) {
  std::string out;
  print_fol(f, out);
  return out;
}

std::string to_string(VarSort s) {
  switch (s) {
    case VarSort::One:
      return "1";
    case VarSort::Del:
      return "d";
    case VarSort::Any:
      return "any";
  }
  return "?";
}

}  // namespace polarity
