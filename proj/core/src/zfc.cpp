#include "bvl/zfc.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <optional>
#include <set>

#include "bvl/boolalg.hpp"
#include "bvl/error.hpp"

namespace bvl::zfc {

const Language& lzfc() {
  static const Language lang = [] {
    Language l("lzfc");
    l.add_function("empty", 0);
    l.add_function("omega", 0);
    l.add_function("P", 1);
    l.add_function("U", 1);
    l.add_function("pair", 2);
    l.add_relation("in", 2);
    return l;
  }();
  return lang;
}

const Symbols& symbols() {
  static const Symbols s = [] {
    const auto& l = lzfc();
    return Symbols{*l.find_function("empty"), *l.find_function("omega"), *l.find_function("P"),
                   *l.find_function("U"),     *l.find_function("pair"),  *l.find_relation("in")};
  }();
  return s;
}

namespace {

// ---------------------------------------------------------------- lexing

enum class Tok { Ident, LParen, RParen, Comma, Dot, Eq, Arrow, Iff, Leq, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line, column;
};

const std::array<std::pair<std::string_view, std::string_view>, 14> kUnicode{{
    {"∀", "forall"},
    {"∃", "exists"},
    {"∈", "in"},
    {"¬", "not"},
    {"∧", "and"},
    {"∨", "or"},
    {"→", "->"},
    {"⟹", "->"},
    {"↔", "<->"},
    {"⊆", "subset"},
    {"≤", "<="},
    {"∅", "empty"},
    {"ω", "omega"},
    {"⊥", "false"},
}};

[[noreturn]] void parse_error(std::size_t line, std::size_t col, const std::string& msg) {
  fail(ErrorCode::Parse, std::to_string(line) + ":" + std::to_string(col) + ": " + msg);
}

std::vector<Token> lex(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0, line = 1, col = 1;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      // Count code points, not bytes, for the column.
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else if ((static_cast<unsigned char>(text[i]) & 0xC0) != 0x80) {
        ++col;
      }
      ++i;
    }
  };
  auto push = [&](Tok k, std::string t, std::size_t n) {
    out.push_back({k, std::move(t), line, col});
    advance(n);
  };
  auto symbol_kind = [](std::string_view s) {
    if (s == "->") return Tok::Arrow;
    if (s == "<->") return Tok::Iff;
    if (s == "<=") return Tok::Leq;
    return Tok::Ident;
  };
  while (i < text.size()) {
    char c = text[i];
    if (c == '\n' || std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (text.substr(i, 2) == "--") {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    if (text.substr(i, 3) == "<->") { push(Tok::Iff, "<->", 3); continue; }
    if (text.substr(i, 2) == "->") { push(Tok::Arrow, "->", 2); continue; }
    if (text.substr(i, 2) == "<=") { push(Tok::Leq, "<=", 2); continue; }
    if (c == '(') { push(Tok::LParen, "(", 1); continue; }
    if (c == ')') { push(Tok::RParen, ")", 1); continue; }
    if (c == ',') { push(Tok::Comma, ",", 1); continue; }
    if (c == '.') { push(Tok::Dot, ".", 1); continue; }
    if (c == '=') { push(Tok::Eq, "=", 1); continue; }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) ||
                                 text[j] == '_' || text[j] == '\'')) {
        ++j;
      }
      push(Tok::Ident, std::string(text.substr(i, j - i)), j - i);
      continue;
    }
    bool matched = false;
    for (auto [sym, word] : kUnicode) {
      if (text.substr(i, sym.size()) == sym) {
        push(symbol_kind(word), std::string(word), sym.size());
        matched = true;
        break;
      }
    }
    if (!matched) parse_error(line, col, std::string("unexpected character '") + c + "'");
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

// ---------------------------------------------------------------- parsing

const std::set<std::string, std::less<>> kKeywords{
    "forall", "exists", "in",    "not",   "and",  "or", "false", "Ord",
    "P",      "U",      "pair",  "empty", "omega", "subset"};

class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(lex(text)) {}

  NamedFormula formula_all() {
    auto f = iff();
    expect_end();
    return f;
  }

  NamedTerm term_all() {
    auto t = term();
    expect_end();
    return t;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  bool at_word(std::string_view w) const { return peek().kind == Tok::Ident && peek().text == w; }
  Token take() { return toks_[pos_++]; }

  [[noreturn]] void error_here(const std::string& msg) const {
    const auto& t = peek();
    std::string got = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
    parse_error(t.line, t.column, msg + ", got " + got);
  }

  void expect(Tok k, const char* what) {
    if (peek().kind != k) error_here(std::string("expected ") + what);
    ++pos_;
  }

  void expect_end() {
    if (peek().kind != Tok::End) error_here("expected end of input");
  }

  static NamedFormula node(NamedFormula::Kind k, const Token& at) {
    NamedFormula f;
    f.kind = k;
    f.line = at.line;
    f.column = at.column;
    return f;
  }

  NamedFormula binary(NamedFormula::Kind k, NamedFormula lhs, NamedFormula rhs) {
    NamedFormula f;
    f.kind = k;
    f.line = lhs.line;
    f.column = lhs.column;
    f.subs = {std::move(lhs), std::move(rhs)};
    return f;
  }

  NamedFormula iff() {
    auto lhs = imp();
    if (peek().kind == Tok::Iff) {
      take();
      return binary(NamedFormula::Kind::Iff, std::move(lhs), iff());
    }
    return lhs;
  }

  NamedFormula imp() {
    auto lhs = disj();
    if (peek().kind == Tok::Arrow) {
      take();
      return binary(NamedFormula::Kind::Imp, std::move(lhs), imp());
    }
    return lhs;
  }

  NamedFormula disj() {
    auto lhs = conj();
    if (at_word("or")) {
      take();
      return binary(NamedFormula::Kind::Or, std::move(lhs), disj());
    }
    return lhs;
  }

  NamedFormula conj() {
    auto lhs = unary();
    if (at_word("and")) {
      take();
      return binary(NamedFormula::Kind::And, std::move(lhs), conj());
    }
    return lhs;
  }

  NamedFormula unary() {
    if (at_word("not")) {
      auto f = node(NamedFormula::Kind::Not, take());
      f.subs.push_back(unary());
      return f;
    }
    if (at_word("forall") || at_word("exists")) return quantifier();
    return atom();
  }

  NamedFormula quantifier() {
    auto q = take();
    auto kind = q.text == "forall" ? NamedFormula::Kind::Forall : NamedFormula::Kind::Exists;
    std::vector<Token> names;
    while (peek().kind == Tok::Ident && !kKeywords.contains(peek().text)) names.push_back(take());
    if (names.empty()) error_here("expected a variable name");
    std::vector<NamedTerm> bound;
    if (at_word("in")) {
      take();
      bound.push_back(term());
    }
    expect(Tok::Dot, "'.'");
    auto body = iff();
    for (auto it = names.rbegin(); it != names.rend(); ++it) {
      auto f = node(kind, it == names.rend() - 1 ? q : *it);
      f.var = it->text;
      f.bound = bound;
      f.subs.push_back(std::move(body));
      body = std::move(f);
    }
    return body;
  }

  NamedFormula atom() {
    const auto& t = peek();
    if (at_word("false")) return node(NamedFormula::Kind::False, take());
    if (t.kind == Tok::LParen) {
      take();
      auto f = iff();
      expect(Tok::RParen, "')'");
      return f;
    }
    if (at_word("Ord")) {
      auto f = node(NamedFormula::Kind::Ord, take());
      expect(Tok::LParen, "'('");
      f.terms.push_back(term());
      expect(Tok::RParen, "')'");
      return f;
    }
    auto start = t;
    auto lhs = term();
    NamedFormula::Kind kind;
    if (at_word("in")) {
      kind = NamedFormula::Kind::In;
    } else if (peek().kind == Tok::Eq) {
      kind = NamedFormula::Kind::Eq;
    } else if (at_word("subset")) {
      kind = NamedFormula::Kind::Subset;
    } else if (peek().kind == Tok::Leq) {
      kind = NamedFormula::Kind::Leq;
    } else {
      error_here("expected 'in', '=', 'subset' or '<='");
    }
    take();
    auto f = node(kind, start);
    f.terms.push_back(std::move(lhs));
    f.terms.push_back(term());
    return f;
  }

  NamedTerm term() {
    auto t = peek();
    NamedTerm out;
    out.line = t.line;
    out.column = t.column;
    if (t.kind != Tok::Ident) error_here("expected a term");
    take();
    if (t.text == "empty") {
      out.kind = NamedTerm::Kind::Empty;
    } else if (t.text == "omega") {
      out.kind = NamedTerm::Kind::Omega;
    } else if (t.text == "P" || t.text == "U" || t.text == "pair") {
      out.kind = t.text == "P"   ? NamedTerm::Kind::Power
                 : t.text == "U" ? NamedTerm::Kind::Union
                                 : NamedTerm::Kind::Pair;
      expect(Tok::LParen, "'('");
      out.args.push_back(term());
      if (out.kind == NamedTerm::Kind::Pair) {
        expect(Tok::Comma, "','");
        out.args.push_back(term());
      }
      expect(Tok::RParen, "')'");
    } else if (kKeywords.contains(t.text)) {
      --pos_;
      error_here("expected a term");
    } else {
      out.kind = NamedTerm::Kind::Name;
      out.name = t.text;
    }
    return out;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

NamedFormula parse(std::string_view text) { return Parser(text).formula_all(); }
NamedTerm parse_named_term(std::string_view text) { return Parser(text).term_all(); }

// ---------------------------------------------------------------- definitions

const std::vector<Definition>& definition_table() {
  static const std::vector<Definition> table{
      {"subset", {"a", "b"}, "forall z. z in a -> z in b"},
      // a <= b: some relation f between a subset of b and a is a function
      // onto a.
      {"leq",
       {"a", "b"},
       "exists f. (forall u in f. exists s in b. exists t in a. u = pair(s, t)) and "
       "(forall s t t2. pair(s, t) in f -> pair(s, t2) in f -> t = t2) and "
       "(forall t in a. exists s in b. pair(s, t) in f)"},
      // Trichotomy, well-foundedness and transitivity under membership.
      {"Ord",
       {"a"},
       "(forall x y in a. x = y or x in y or y in x) and "
       "(forall x. x subset a -> not x = empty -> exists y in x. forall w in x. not w in y) and "
       "(forall x. x in a -> x subset a)"},
  };
  return table;
}

namespace {

using TermMap = std::map<std::string, NamedTerm>;

NamedTerm rename_term(const NamedTerm& t, const TermMap& m) {
  if (t.kind == NamedTerm::Kind::Name) {
    auto it = m.find(t.name);
    return it == m.end() ? t : it->second;
  }
  NamedTerm out = t;
  for (auto& a : out.args) a = rename_term(a, m);
  return out;
}

class Expander {
 public:
  NamedFormula expand(const NamedFormula& f) {
    using K = NamedFormula::Kind;
    if (f.kind == K::Subset || f.kind == K::Leq || f.kind == K::Ord) {
      const char* name = f.kind == K::Subset ? "subset" : f.kind == K::Leq ? "leq" : "Ord";
      const auto& defs = definition_table();
      auto def = std::find_if(defs.begin(), defs.end(), [&](const Definition& d) { return d.name == name; });
      TermMap m;
      for (std::size_t i = 0; i < def->params.size(); ++i) m[def->params[i]] = f.terms[i];
      return expand(instantiate(body(*def), m));
    }
    NamedFormula out = f;
    for (auto& s : out.subs) s = expand(s);
    return out;
  }

 private:
  const NamedFormula& body(const Definition& d) {
    auto it = parsed_.find(d.name);
    if (it == parsed_.end()) it = parsed_.emplace(d.name, parse(d.body)).first;
    return it->second;
  }

  // Substitutes parameters and gives every binder a fresh '#' name.
  NamedFormula instantiate(const NamedFormula& f, const TermMap& m) {
    NamedFormula out = f;
    for (auto& t : out.terms) t = rename_term(t, m);
    for (auto& b : out.bound) b = rename_term(b, m);
    if (f.kind == NamedFormula::Kind::Forall || f.kind == NamedFormula::Kind::Exists) {
      out.var = f.var + "#" + std::to_string(counter_++);
      TermMap inner = m;
      NamedTerm v;
      v.name = out.var;
      inner[f.var] = v;
      out.subs[0] = instantiate(f.subs[0], inner);
      return out;
    }
    for (auto& s : out.subs) s = instantiate(s, m);
    return out;
  }

  std::map<std::string, NamedFormula> parsed_;
  std::size_t counter_ = 0;
};

}  // namespace

NamedFormula expand_definitions(const NamedFormula& f) { return Expander().expand(f); }

// ---------------------------------------------------------------- elaboration

namespace {

class Elaborator {
 public:
  explicit Elaborator(const std::vector<std::string>& free) : free_(free) {}

  Term term(const NamedTerm& t) {
    const auto& s = symbols();
    switch (t.kind) {
      case NamedTerm::Kind::Name:
        return lookup(t);
      case NamedTerm::Kind::Empty:
        return Term::func(s.empty);
      case NamedTerm::Kind::Omega:
        return Term::func(s.omega);
      case NamedTerm::Kind::Power:
        return apply(s.power, {term(t.args[0])});
      case NamedTerm::Kind::Union:
        return apply(s.union_, {term(t.args[0])});
      case NamedTerm::Kind::Pair:
        return apply(s.pair, {term(t.args[0]), term(t.args[1])});
    }
    fail(ErrorCode::Invalid, "elaborate: bad term");
  }

  Formula formula(const NamedFormula& f) {
    using K = NamedFormula::Kind;
    switch (f.kind) {
      case K::False:
        return Formula::falsum();
      case K::In:
        return apply_rel(symbols().in, {term(f.terms[0]), term(f.terms[1])});
      case K::Eq:
        return Formula::equal(term(f.terms[0]), term(f.terms[1]));
      case K::Not:
        return not_(formula(f.subs[0]));
      case K::And:
        return and_(formula(f.subs[0]), formula(f.subs[1]));
      case K::Or:
        return or_(formula(f.subs[0]), formula(f.subs[1]));
      case K::Imp:
        return Formula::imp(formula(f.subs[0]), formula(f.subs[1]));
      case K::Iff:
        return iff(formula(f.subs[0]), formula(f.subs[1]));
      case K::Forall:
      case K::Exists: {
        std::optional<Term> bound;
        if (!f.bound.empty()) bound = lift(term(f.bound[0]), 1, 0);
        scope_.push_back(f.var);
        Formula body = formula(f.subs[0]);
        scope_.pop_back();
        if (f.kind == K::Forall) {
          if (bound) body = Formula::imp(member(*bound), body);
          return Formula::all(body);
        }
        if (bound) body = and_(member(*bound), body);
        return ex(body);
      }
      case K::Subset:
      case K::Leq:
      case K::Ord:
        return formula(expand_definitions(f));
    }
    fail(ErrorCode::Invalid, "elaborate: bad formula");
  }

 private:
  static Formula member(const Term& bound) {
    return apply_rel(symbols().in, {Term::var(0), bound});
  }

  Term lookup(const NamedTerm& t) {
    for (std::size_t k = scope_.size(); k-- > 0;) {
      if (scope_[k] == t.name) return Term::var(scope_.size() - 1 - k);
    }
    for (std::size_t j = 0; j < free_.size(); ++j) {
      if (free_[j] == t.name) return Term::var(scope_.size() + j);
    }
    parse_error(t.line, t.column, "unbound variable '" + t.name + "'");
  }

  const std::vector<std::string>& free_;
  std::vector<std::string> scope_;
};

}  // namespace

Formula elaborate(const NamedFormula& f, const std::vector<std::string>& free_names) {
  return Elaborator(free_names).formula(f);
}

Term elaborate_term(const NamedTerm& t, const std::vector<std::string>& free_names) {
  return Elaborator(free_names).term(t);
}

// ---------------------------------------------------------------- printing

namespace {

std::optional<Formula> match_not(const Formula& f) {
  if (f.kind() == Formula::Kind::Imp && f.rhs().kind() == Formula::Kind::Falsum) return f.lhs();
  return std::nullopt;
}

std::optional<std::pair<Formula, Formula>> match_or(const Formula& f) {
  if (f.kind() != Formula::Kind::Imp) return std::nullopt;
  auto a = match_not(f.lhs());
  if (!a) return std::nullopt;
  return std::make_pair(*a, f.rhs());
}

std::optional<std::pair<Formula, Formula>> match_and(const Formula& f) {
  auto inner = match_not(f);
  if (!inner) return std::nullopt;
  auto o = match_or(*inner);
  if (!o) return std::nullopt;
  auto a = match_not(o->first);
  auto b = match_not(o->second);
  if (!a || !b) return std::nullopt;
  return std::make_pair(*a, *b);
}

std::optional<std::pair<Formula, Formula>> match_iff(const Formula& f) {
  auto c = match_and(f);
  if (!c || c->first.kind() != Formula::Kind::Imp || c->second.kind() != Formula::Kind::Imp) {
    return std::nullopt;
  }
  auto a = c->first.lhs(), b = c->first.rhs();
  if (c->second.lhs() != b || c->second.rhs() != a) return std::nullopt;
  return std::make_pair(a, b);
}

std::optional<Formula> match_ex(const Formula& f) {
  auto inner = match_not(f);
  if (!inner || inner->kind() != Formula::Kind::All) return std::nullopt;
  return match_not(inner->body());
}

std::string var_name(std::size_t index, std::size_t depth) {
  if (index < depth) return "v" + std::to_string(depth - 1 - index);
  return "f" + std::to_string(index - depth);
}

std::string term_text(const Term& t, std::size_t depth) {
  const auto& s = symbols();
  switch (t.kind()) {
    case Term::Kind::Var:
      return var_name(t.var_index(), depth);
    case Term::Kind::Func:
      if (t.symbol() == s.empty) return "empty";
      if (t.symbol() == s.omega) return "omega";
      break;
    case Term::Kind::App: {
      if (t.arity() != 0) break;
      const auto& h = t.head();
      if (h.kind() == Term::Kind::Func && h.symbol() == s.power) return "P(" + term_text(t.arg(), depth) + ")";
      if (h.kind() == Term::Kind::Func && h.symbol() == s.union_) return "U(" + term_text(t.arg(), depth) + ")";
      if (h.kind() == Term::Kind::App && h.head().kind() == Term::Kind::Func && h.head().symbol() == s.pair) {
        return "pair(" + term_text(h.arg(), depth) + ", " + term_text(t.arg(), depth) + ")";
      }
      break;
    }
  }
  fail(ErrorCode::Invalid, "print: not a term of the set-theory language");
}

enum Level { kQuant = 0, kIff = 1, kImp = 2, kOr = 3, kAnd = 4, kUnary = 5, kAtom = 6 };

std::string text(const Formula& f, std::size_t depth, int ctx);

std::string wrap(std::string s, int level, int ctx) {
  return level < ctx ? "(" + s + ")" : s;
}

std::string binary_text(const char* op, int level, const Formula& a, const Formula& b,
                        std::size_t depth, int ctx) {
  return wrap(text(a, depth, level + 1) + " " + op + " " + text(b, depth, level), level, ctx);
}

std::string text(const Formula& f, std::size_t depth, int ctx) {
  if (auto p = match_iff(f)) return binary_text("<->", kIff, p->first, p->second, depth, ctx);
  if (auto p = match_and(f)) return binary_text("and", kAnd, p->first, p->second, depth, ctx);
  if (auto b = match_ex(f)) {
    return wrap("exists v" + std::to_string(depth) + ". " + text(*b, depth + 1, kQuant), kQuant, ctx);
  }
  if (auto a = match_not(f)) return wrap("not " + text(*a, depth, kUnary), kUnary, ctx);
  if (auto p = match_or(f)) return binary_text("or", kOr, p->first, p->second, depth, ctx);
  switch (f.kind()) {
    case Formula::Kind::Falsum:
      return "false";
    case Formula::Kind::Equal:
      return term_text(f.left_term(), depth) + " = " + term_text(f.right_term(), depth);
    case Formula::Kind::Imp:
      return binary_text("->", kImp, f.lhs(), f.rhs(), depth, ctx);
    case Formula::Kind::All:
      return wrap("forall v" + std::to_string(depth) + ". " + text(f.body(), depth + 1, kQuant), kQuant, ctx);
    case Formula::Kind::AppRel: {
      const auto& h = f.head();
      if (f.arity() == 0 && h.kind() == Formula::Kind::AppRel && h.head().kind() == Formula::Kind::Rel &&
          h.head().symbol() == symbols().in) {
        return term_text(h.arg(), depth) + " in " + term_text(f.arg(), depth);
      }
      break;
    }
    case Formula::Kind::Rel:
      break;
  }
  fail(ErrorCode::Invalid, "print: not a formula of the set-theory language");
}

}  // namespace

std::string print(const Formula& f) { return text(f, 0, kQuant); }
std::string print(const Term& t) { return term_text(t, 0); }

std::vector<std::string> printed_free_names(std::size_t count) {
  std::vector<std::string> out;
  for (std::size_t j = 0; j < count; ++j) out.push_back("f" + std::to_string(j));
  return out;
}

// ---------------------------------------------------------------- corpus

const std::vector<std::pair<std::string, std::string>>& axiom_sources() {
  static const std::vector<std::pair<std::string, std::string>> sources{
      {"emptyset", "forall x. not x in empty"},
      {"ordered_pairs", "forall x y z w. pair(x, y) = pair(z, w) <-> x = z and y = w"},
      {"extensionality", "forall x y. (forall z. z in x <-> z in y) -> x = y"},
      {"union", "forall u x. x in U(u) <-> exists y in u. x in y"},
      {"powerset", "forall z y. y in P(z) <-> forall x in y. x in z"},
      {"infinity",
       "empty in omega and (forall x in omega. exists y in omega. x in y) and "
       "(exists a. Ord(a) and omega = a) and "
       "forall a. Ord(a) -> (empty in a and forall x in a. exists y in a. x in y) -> omega subset a"},
      {"regularity", "forall x. not x = empty -> exists y in x. forall z in x. not z in y"},
      // The maximal element ranges over z, the only set in scope there.
      {"zorns_lemma",
       "forall z. not z = empty -> "
       "(forall y. y subset z and (forall x1 x2 in y. x1 subset x2 or x2 subset x1) -> U(y) in z) -> "
       "exists m in z. forall x in z. m subset x -> m = x"},
  };
  return sources;
}

namespace {

void free_names_term(const NamedTerm& t, const std::set<std::string>& bound, std::set<std::string>& out) {
  if (t.kind == NamedTerm::Kind::Name && !bound.contains(t.name)) out.insert(t.name);
  for (const auto& a : t.args) free_names_term(a, bound, out);
}

void free_names(const NamedFormula& f, std::set<std::string> bound, std::set<std::string>& out) {
  for (const auto& t : f.terms) free_names_term(t, bound, out);
  for (const auto& t : f.bound) free_names_term(t, bound, out);
  if (f.kind == NamedFormula::Kind::Forall || f.kind == NamedFormula::Kind::Exists) bound.insert(f.var);
  for (const auto& s : f.subs) free_names(s, bound, out);
}

NamedTerm name_term(const std::string& n) {
  NamedTerm t;
  t.name = n;
  return t;
}

NamedFormula quant(NamedFormula::Kind k, const std::string& var, std::optional<std::string> bound,
                   NamedFormula body) {
  NamedFormula f;
  f.kind = k;
  f.var = var;
  if (bound) f.bound.push_back(name_term(*bound));
  f.subs.push_back(std::move(body));
  return f;
}

NamedFormula conn(NamedFormula::Kind k, NamedFormula a, NamedFormula b) {
  NamedFormula f;
  f.kind = k;
  f.subs = {std::move(a), std::move(b)};
  return f;
}

}  // namespace

NamedFormula collection_schema(const NamedFormula& phi, const std::vector<std::string>& params) {
  std::set<std::string> allowed{"x", "y"};
  for (const auto& p : params) {
    if (p == "x" || p == "y" || p == "A" || p == "B") {
      fail(ErrorCode::Invalid, "collection: parameter may not be named " + p);
    }
    allowed.insert(p);
  }
  std::set<std::string> free;
  free_names(phi, {}, free);
  for (const auto& n : free) {
    if (!allowed.contains(n)) fail(ErrorCode::Invalid, "collection: unexpected free name '" + n + "'");
  }
  using K = NamedFormula::Kind;
  auto premise = quant(K::Forall, "x", "A", quant(K::Exists, "y", std::nullopt, phi));
  auto into = quant(K::Forall, "x", "A", quant(K::Exists, "y", "B", phi));
  auto onto = quant(K::Forall, "y", "B", quant(K::Exists, "x", "A", phi));
  auto conclusion = quant(K::Exists, "B", std::nullopt, conn(K::And, into, onto));
  auto f = quant(K::Forall, "A", std::nullopt, conn(K::Imp, premise, conclusion));
  for (auto it = params.rbegin(); it != params.rend(); ++it) f = quant(K::Forall, *it, std::nullopt, f);
  return f;
}

Formula collection_instance(std::string_view phi, const std::vector<std::string>& params) {
  return elaborate(collection_schema(parse(phi), params));
}

std::vector<std::pair<std::string, Formula>> zfc_axioms() {
  std::vector<std::pair<std::string, Formula>> out;
  for (const auto& [name, src] : axiom_sources()) out.emplace_back(name, elaborate(parse(src)));
  out.emplace_back("collection_eq", collection_instance("x = y"));
  out.emplace_back("collection_pair", collection_instance("pair(x, p) in y", {"p"}));
  return out;
}

Formula axiom(std::string_view name) {
  for (auto& [n, f] : zfc_axioms()) {
    if (n == name) return f;
  }
  fail(ErrorCode::Invalid, "unknown axiom '" + std::string(name) + "'");
}

std::string_view ch_source() {
  return "forall x. Ord(x) -> x <= omega or P(omega) <= x";
}

Formula ch_sentence() { return elaborate(parse(ch_source())); }

semantics::BStructure sanity_structure() {
  auto alg = std::make_shared<const boolalg::FinCBA>(boolalg::FinCBA::powerset(1));
  semantics::BStructure s(lzfc(), alg, 2);
  const auto& sym = symbols();
  s.set_function(sym.empty, {0});
  s.set_function(sym.omega, {1});
  s.set_function(sym.power, {1, 1});
  s.set_function(sym.union_, {0, 0});
  s.set_function(sym.pair, {0, 0, 0, 0});
  s.set_relation(sym.in, {alg->bot(), alg->top(), alg->bot(), alg->bot()});
  return s;
}

}  // namespace bvl::zfc
