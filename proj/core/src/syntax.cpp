#include "bvl/syntax.hpp"

#include <algorithm>
#include <sstream>

#include "bvl/error.hpp"
#include "text_util.hpp"

namespace bvl {

// ---------------------------------------------------------------------------
// Language

bool Language::name_taken(std::string_view name) const {
  return find_function(name).has_value() || find_relation(name).has_value();
}

SymbolRef Language::add_function(std::string name, std::size_t arity) {
  if (name.empty() || name_taken(name)) {
    fail(ErrorCode::Invalid, "duplicate or empty symbol name '" + name + "'");
  }
  auto& bucket = functions_[arity];
  bucket.push_back(std::move(name));
  return {arity, bucket.size() - 1};
}

SymbolRef Language::add_relation(std::string name, std::size_t arity) {
  if (name.empty() || name_taken(name)) {
    fail(ErrorCode::Invalid, "duplicate or empty symbol name '" + name + "'");
  }
  auto& bucket = relations_[arity];
  bucket.push_back(std::move(name));
  return {arity, bucket.size() - 1};
}

namespace {

bool has_symbol(const std::map<std::size_t, std::vector<std::string>>& table, SymbolRef s) {
  auto it = table.find(s.arity);
  return it != table.end() && s.index < it->second.size();
}

std::optional<SymbolRef> find_symbol(const std::map<std::size_t, std::vector<std::string>>& table,
                                     std::string_view name) {
  for (const auto& [arity, names] : table) {
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (names[i] == name) return SymbolRef{arity, i};
    }
  }
  return std::nullopt;
}

std::vector<SymbolRef> all_symbols(const std::map<std::size_t, std::vector<std::string>>& table) {
  std::vector<SymbolRef> out;
  for (const auto& [arity, names] : table) {
    for (std::size_t i = 0; i < names.size(); ++i) out.push_back({arity, i});
  }
  return out;
}

}  // namespace

bool Language::has_function(SymbolRef symbol) const { return has_symbol(functions_, symbol); }
bool Language::has_relation(SymbolRef symbol) const { return has_symbol(relations_, symbol); }

const std::string& Language::function_name(SymbolRef symbol) const {
  if (!has_function(symbol)) fail(ErrorCode::Invalid, "unknown function symbol");
  return functions_.at(symbol.arity)[symbol.index];
}

const std::string& Language::relation_name(SymbolRef symbol) const {
  if (!has_relation(symbol)) fail(ErrorCode::Invalid, "unknown relation symbol");
  return relations_.at(symbol.arity)[symbol.index];
}

std::optional<SymbolRef> Language::find_function(std::string_view name) const {
  return find_symbol(functions_, name);
}

std::optional<SymbolRef> Language::find_relation(std::string_view name) const {
  return find_symbol(relations_, name);
}

std::vector<SymbolRef> Language::function_symbols() const { return all_symbols(functions_); }
std::vector<SymbolRef> Language::relation_symbols() const { return all_symbols(relations_); }

std::string Language::to_text() const {
  std::ostringstream out;
  for (const auto& [arity, names] : functions_) {
    for (const auto& n : names) out << "func " << n << ' ' << arity << '\n';
  }
  for (const auto& [arity, names] : relations_) {
    for (const auto& n : names) out << "rel " << n << ' ' << arity << '\n';
  }
  return out.str();
}

Language Language::from_text(std::string_view text, std::string name) {
  Language lang(std::move(name));
  std::size_t line_no = 0;
  for (const auto& line : text_util::lines(text)) {
    ++line_no;
    auto words = text_util::words(text_util::strip_comment(line));
    if (words.empty()) continue;
    if (words.size() != 3 || (words[0] != "func" && words[0] != "rel")) {
      fail(ErrorCode::Parse, std::to_string(line_no) + ":1: expected 'func NAME ARITY' or 'rel NAME ARITY'");
    }
    auto arity = text_util::to_index(words[2], line_no);
    if (words[0] == "func") {
      lang.add_function(words[1], arity);
    } else {
      lang.add_relation(words[1], arity);
    }
  }
  return lang;
}

// ---------------------------------------------------------------------------
// Nodes

namespace detail {

inline std::size_t mix(std::size_t seed, std::size_t value) {
  return seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

struct TermNode {
  Term::Kind kind;
  std::size_t var_index = 0;
  SymbolRef symbol{};
  std::shared_ptr<const TermNode> head;
  std::shared_ptr<const TermNode> arg;
  std::size_t arity = 0;
  std::size_t size = 1;
  std::size_t free_bound = 0;
  std::size_t hash = 0;
};

struct FormulaNode {
  Formula::Kind kind;
  SymbolRef symbol{};
  std::optional<Term> t1;
  std::optional<Term> t2;
  std::shared_ptr<const FormulaNode> a;
  std::shared_ptr<const FormulaNode> b;
  std::size_t arity = 0;
  std::size_t size = 1;
  std::size_t free_bound = 0;
  std::size_t hash = 0;
};

}  // namespace detail

using detail::FormulaNode;
using detail::mix;
using detail::TermNode;

// ---------------------------------------------------------------------------
// Term

Term Term::var(std::size_t index) {
  auto n = std::make_shared<TermNode>();
  n->kind = Kind::Var;
  n->var_index = index;
  n->free_bound = index + 1;
  n->hash = mix(mix(1, 0x11), index);
  return Term(std::move(n));
}

Term Term::func(SymbolRef symbol) {
  auto n = std::make_shared<TermNode>();
  n->kind = Kind::Func;
  n->symbol = symbol;
  n->arity = symbol.arity;
  n->hash = mix(mix(mix(2, 0x22), symbol.arity), symbol.index);
  return Term(std::move(n));
}

Term Term::app(const Term& head, const Term& arg) {
  if (head.arity() == 0) fail(ErrorCode::Invalid, "app: head is already fully applied");
  if (arg.arity() != 0) fail(ErrorCode::Invalid, "app: argument is not a term (arity > 0)");
  auto n = std::make_shared<TermNode>();
  n->kind = Kind::App;
  n->head = head.node_;
  n->arg = arg.node_;
  n->arity = head.arity() - 1;
  n->size = 1 + head.size() + arg.size();
  n->free_bound = std::max(head.free_bound(), arg.free_bound());
  n->hash = mix(mix(mix(3, 0x33), head.hash()), arg.hash());
  return Term(std::move(n));
}

Term::Kind Term::kind() const { return node_->kind; }
std::size_t Term::var_index() const { return node_->var_index; }
SymbolRef Term::symbol() const { return node_->symbol; }
Term Term::head() const { return Term(node_->head); }
Term Term::arg() const { return Term(node_->arg); }
std::size_t Term::arity() const { return node_->arity; }
std::size_t Term::size() const { return node_->size; }
std::size_t Term::free_bound() const { return node_->free_bound; }
std::size_t Term::hash() const { return node_->hash; }

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash() || a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Term::Kind::Var: return a.var_index() == b.var_index();
    case Term::Kind::Func: return a.symbol() == b.symbol();
    case Term::Kind::App: return a.head() == b.head() && a.arg() == b.arg();
  }
  return false;
}

std::strong_ordering operator<=>(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.kind() <=> b.kind(); c != 0) return c;
  switch (a.kind()) {
    case Term::Kind::Var: return a.var_index() <=> b.var_index();
    case Term::Kind::Func: return a.symbol() <=> b.symbol();
    case Term::Kind::App:
      if (auto c = a.head() <=> b.head(); c != 0) return c;
      return a.arg() <=> b.arg();
  }
  return std::strong_ordering::equal;
}

// ---------------------------------------------------------------------------
// Formula

Formula Formula::falsum() {
  auto n = std::make_shared<FormulaNode>();
  n->kind = Kind::Falsum;
  n->hash = mix(10, 0xf0);
  return Formula(std::move(n));
}

Formula Formula::equal(const Term& lhs, const Term& rhs) {
  if (lhs.arity() != 0 || rhs.arity() != 0) {
    fail(ErrorCode::Invalid, "equal: both sides must be fully applied terms");
  }
  auto n = std::make_shared<FormulaNode>();
  n->kind = Kind::Equal;
  n->t1 = lhs;
  n->t2 = rhs;
  n->size = 1 + lhs.size() + rhs.size();
  n->free_bound = std::max(lhs.free_bound(), rhs.free_bound());
  n->hash = mix(mix(mix(11, 0xf1), lhs.hash()), rhs.hash());
  return Formula(std::move(n));
}

Formula Formula::rel(SymbolRef symbol) {
  auto n = std::make_shared<FormulaNode>();
  n->kind = Kind::Rel;
  n->symbol = symbol;
  n->arity = symbol.arity;
  n->hash = mix(mix(mix(12, 0xf2), symbol.arity), symbol.index);
  return Formula(std::move(n));
}

Formula Formula::apprel(const Formula& head, const Term& arg) {
  if (head.arity() == 0) fail(ErrorCode::Invalid, "apprel: head is already fully applied");
  if (arg.arity() != 0) fail(ErrorCode::Invalid, "apprel: argument is not a term (arity > 0)");
  auto n = std::make_shared<FormulaNode>();
  n->kind = Kind::AppRel;
  n->a = head.node_;
  n->t1 = arg;
  n->arity = head.arity() - 1;
  n->size = 1 + head.size() + arg.size();
  n->free_bound = std::max(head.free_bound(), arg.free_bound());
  n->hash = mix(mix(mix(13, 0xf3), head.hash()), arg.hash());
  return Formula(std::move(n));
}

Formula Formula::imp(const Formula& lhs, const Formula& rhs) {
  if (lhs.arity() != 0 || rhs.arity() != 0) {
    fail(ErrorCode::Invalid, "imp: operands must be formulas (arity 0)");
  }
  auto n = std::make_shared<FormulaNode>();
  n->kind = Kind::Imp;
  n->a = lhs.node_;
  n->b = rhs.node_;
  n->size = 1 + lhs.size() + rhs.size();
  n->free_bound = std::max(lhs.free_bound(), rhs.free_bound());
  n->hash = mix(mix(mix(14, 0xf4), lhs.hash()), rhs.hash());
  return Formula(std::move(n));
}

Formula Formula::all(const Formula& body) {
  if (body.arity() != 0) fail(ErrorCode::Invalid, "all: body must be a formula (arity 0)");
  auto n = std::make_shared<FormulaNode>();
  n->kind = Kind::All;
  n->a = body.node_;
  n->size = 1 + body.size();
  n->free_bound = body.free_bound() == 0 ? 0 : body.free_bound() - 1;
  n->hash = mix(mix(15, 0xf5), body.hash());
  return Formula(std::move(n));
}

Formula::Kind Formula::kind() const { return node_->kind; }
const Term& Formula::left_term() const { return *node_->t1; }
const Term& Formula::right_term() const { return *node_->t2; }
const Term& Formula::arg() const { return *node_->t1; }
SymbolRef Formula::symbol() const { return node_->symbol; }
Formula Formula::head() const { return Formula(node_->a); }
Formula Formula::lhs() const { return Formula(node_->a); }
Formula Formula::rhs() const { return Formula(node_->b); }
Formula Formula::body() const { return Formula(node_->a); }
std::size_t Formula::arity() const { return node_->arity; }
std::size_t Formula::size() const { return node_->size; }
std::size_t Formula::free_bound() const { return node_->free_bound; }
std::size_t Formula::hash() const { return node_->hash; }

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash() || a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Formula::Kind::Falsum: return true;
    case Formula::Kind::Equal:
      return a.left_term() == b.left_term() && a.right_term() == b.right_term();
    case Formula::Kind::Rel: return a.symbol() == b.symbol();
    case Formula::Kind::AppRel: return a.head() == b.head() && a.arg() == b.arg();
    case Formula::Kind::Imp: return a.lhs() == b.lhs() && a.rhs() == b.rhs();
    case Formula::Kind::All: return a.body() == b.body();
  }
  return false;
}

std::strong_ordering operator<=>(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.kind() <=> b.kind(); c != 0) return c;
  switch (a.kind()) {
    case Formula::Kind::Falsum: return std::strong_ordering::equal;
    case Formula::Kind::Equal:
      if (auto c = a.left_term() <=> b.left_term(); c != 0) return c;
      return a.right_term() <=> b.right_term();
    case Formula::Kind::Rel: return a.symbol() <=> b.symbol();
    case Formula::Kind::AppRel:
      if (auto c = a.head() <=> b.head(); c != 0) return c;
      return a.arg() <=> b.arg();
    case Formula::Kind::Imp:
      if (auto c = a.lhs() <=> b.lhs(); c != 0) return c;
      return a.rhs() <=> b.rhs();
    case Formula::Kind::All: return a.body() <=> b.body();
  }
  return std::strong_ordering::equal;
}

// ---------------------------------------------------------------------------
// Application helpers

Term apply(SymbolRef function, std::span<const Term> args) {
  if (args.size() != function.arity) {
    fail(ErrorCode::Invalid, "apply: expected " + std::to_string(function.arity) + " arguments");
  }
  Term t = Term::func(function);
  for (const auto& a : args) t = Term::app(t, a);
  return t;
}

Term apply(SymbolRef function, std::initializer_list<Term> args) {
  return apply(function, std::span<const Term>(args.begin(), args.size()));
}

Formula apply_rel(SymbolRef relation, std::span<const Term> args) {
  if (args.size() != relation.arity) {
    fail(ErrorCode::Invalid, "apply_rel: expected " + std::to_string(relation.arity) + " arguments");
  }
  Formula f = Formula::rel(relation);
  for (const auto& a : args) f = Formula::apprel(f, a);
  return f;
}

Formula apply_rel(SymbolRef relation, std::initializer_list<Term> args) {
  return apply_rel(relation, std::span<const Term>(args.begin(), args.size()));
}

// ---------------------------------------------------------------------------
// Lifting and substitution

Term lift(const Term& t, std::size_t n, std::size_t m) {
  if (n == 0 || t.free_bound() <= m) return t;
  switch (t.kind()) {
    case Term::Kind::Var: return t.var_index() >= m ? Term::var(t.var_index() + n) : t;
    case Term::Kind::Func: return t;
    case Term::Kind::App: return Term::app(lift(t.head(), n, m), lift(t.arg(), n, m));
  }
  return t;
}

Formula lift(const Formula& f, std::size_t n, std::size_t m) {
  if (n == 0 || f.free_bound() <= m) return f;
  switch (f.kind()) {
    case Formula::Kind::Falsum:
    case Formula::Kind::Rel: return f;
    case Formula::Kind::Equal:
      return Formula::equal(lift(f.left_term(), n, m), lift(f.right_term(), n, m));
    case Formula::Kind::AppRel: return Formula::apprel(lift(f.head(), n, m), lift(f.arg(), n, m));
    case Formula::Kind::Imp: return Formula::imp(lift(f.lhs(), n, m), lift(f.rhs(), n, m));
    case Formula::Kind::All: return Formula::all(lift(f.body(), n, m + 1));
  }
  return f;
}

Term subst(const Term& t, const Term& s, std::size_t n) {
  if (t.free_bound() <= n) return t;
  switch (t.kind()) {
    case Term::Kind::Var: {
      auto i = t.var_index();
      if (i < n) return t;
      if (i == n) return lift(s, n, 0);
      return Term::var(i - 1);
    }
    case Term::Kind::Func: return t;
    case Term::Kind::App: return Term::app(subst(t.head(), s, n), subst(t.arg(), s, n));
  }
  return t;
}

Formula subst(const Formula& f, const Term& s, std::size_t n) {
  if (f.free_bound() <= n) return f;
  switch (f.kind()) {
    case Formula::Kind::Falsum:
    case Formula::Kind::Rel: return f;
    case Formula::Kind::Equal:
      return Formula::equal(subst(f.left_term(), s, n), subst(f.right_term(), s, n));
    case Formula::Kind::AppRel: return Formula::apprel(subst(f.head(), s, n), subst(f.arg(), s, n));
    case Formula::Kind::Imp: return Formula::imp(subst(f.lhs(), s, n), subst(f.rhs(), s, n));
    case Formula::Kind::All: return Formula::all(subst(f.body(), s, n + 1));
  }
  return f;
}

// ---------------------------------------------------------------------------
// Derived connectives

Formula not_(const Formula& f) { return Formula::imp(f, Formula::falsum()); }
Formula or_(const Formula& f, const Formula& g) { return Formula::imp(not_(f), g); }
Formula and_(const Formula& f, const Formula& g) { return not_(or_(not_(f), not_(g))); }
Formula iff(const Formula& f, const Formula& g) {
  return and_(Formula::imp(f, g), Formula::imp(g, f));
}
Formula ex(const Formula& f) { return not_(Formula::all(not_(f))); }

// ---------------------------------------------------------------------------
// S-expressions

namespace {

void write(std::string& out, const Term& t, const Language& lang) {
  switch (t.kind()) {
    case Term::Kind::Var:
      out += "(var " + std::to_string(t.var_index()) + ")";
      return;
    case Term::Kind::Func:
      out += "(func " + lang.function_name(t.symbol()) + ")";
      return;
    case Term::Kind::App:
      out += "(app ";
      write(out, t.head(), lang);
      out += ' ';
      write(out, t.arg(), lang);
      out += ')';
      return;
  }
}

void write(std::string& out, const Formula& f, const Language& lang) {
  switch (f.kind()) {
    case Formula::Kind::Falsum: out += "falsum"; return;
    case Formula::Kind::Equal:
      out += "(eq ";
      write(out, f.left_term(), lang);
      out += ' ';
      write(out, f.right_term(), lang);
      out += ')';
      return;
    case Formula::Kind::Rel: out += "(rel " + lang.relation_name(f.symbol()) + ")"; return;
    case Formula::Kind::AppRel:
      out += "(apprel ";
      write(out, f.head(), lang);
      out += ' ';
      write(out, f.arg(), lang);
      out += ')';
      return;
    case Formula::Kind::Imp:
      out += "(imp ";
      write(out, f.lhs(), lang);
      out += ' ';
      write(out, f.rhs(), lang);
      out += ')';
      return;
    case Formula::Kind::All:
      out += "(all ";
      write(out, f.body(), lang);
      out += ')';
      return;
  }
}

void expect_arity(const sexpr::Node& node, std::size_t count) {
  if (node.items.size() != count) {
    sexpr::error_at(node, "'" + node.items.front().atom + "' expects " +
                              std::to_string(count - 1) + " operand(s)");
  }
}

const std::string& atom_of(const sexpr::Node& node) {
  if (node.is_list) sexpr::error_at(node, "expected an atom");
  return node.atom;
}

template <typename Build>
auto located(const sexpr::Node& node, Build build) {
  try {
    return build();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::Parse) throw;
    sexpr::error_at(node, e.what());
  }
}

}  // namespace

std::string to_sexpr(const Term& t, const Language& lang) {
  std::string out;
  write(out, t, lang);
  return out;
}

std::string to_sexpr(const Formula& f, const Language& lang) {
  std::string out;
  write(out, f, lang);
  return out;
}

Term term_from_sexpr(const sexpr::Node& node, const Language& lang) {
  if (!node.is_list || node.items.empty() || node.items.front().is_list) {
    sexpr::error_at(node, "expected a term: (var N), (func NAME) or (app term term)");
  }
  const auto& head = node.items.front().atom;
  if (head == "var") {
    expect_arity(node, 2);
    const auto& digits = atom_of(node.items[1]);
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), ::isdigit)) {
      sexpr::error_at(node.items[1], "variable index must be a natural number");
    }
    return Term::var(std::stoull(digits));
  }
  if (head == "func") {
    expect_arity(node, 2);
    auto sym = lang.find_function(atom_of(node.items[1]));
    if (!sym) sexpr::error_at(node.items[1], "unknown function symbol '" + node.items[1].atom + "'");
    return Term::func(*sym);
  }
  if (head == "app") {
    expect_arity(node, 3);
    auto h = term_from_sexpr(node.items[1], lang);
    auto a = term_from_sexpr(node.items[2], lang);
    return located(node, [&] { return Term::app(h, a); });
  }
  sexpr::error_at(node, "unknown term constructor '" + head + "'");
}

Formula formula_from_sexpr(const sexpr::Node& node, const Language& lang) {
  if (node.is_atom("falsum")) return Formula::falsum();
  if (!node.is_list || node.items.empty() || node.items.front().is_list) {
    sexpr::error_at(node, "expected a formula");
  }
  const auto& head = node.items.front().atom;
  if (head == "eq") {
    expect_arity(node, 3);
    auto l = term_from_sexpr(node.items[1], lang);
    auto r = term_from_sexpr(node.items[2], lang);
    return located(node, [&] { return Formula::equal(l, r); });
  }
  if (head == "rel") {
    expect_arity(node, 2);
    auto sym = lang.find_relation(atom_of(node.items[1]));
    if (!sym) sexpr::error_at(node.items[1], "unknown relation symbol '" + node.items[1].atom + "'");
    return Formula::rel(*sym);
  }
  if (head == "apprel") {
    expect_arity(node, 3);
    auto h = formula_from_sexpr(node.items[1], lang);
    auto a = term_from_sexpr(node.items[2], lang);
    return located(node, [&] { return Formula::apprel(h, a); });
  }
  if (head == "imp") {
    expect_arity(node, 3);
    auto l = formula_from_sexpr(node.items[1], lang);
    auto r = formula_from_sexpr(node.items[2], lang);
    return located(node, [&] { return Formula::imp(l, r); });
  }
  if (head == "all") {
    expect_arity(node, 2);
    auto b = formula_from_sexpr(node.items[1], lang);
    return located(node, [&] { return Formula::all(b); });
  }
  sexpr::error_at(node, "unknown formula constructor '" + head + "'");
}

Term parse_term(std::string_view text, const Language& lang) {
  return term_from_sexpr(sexpr::parse_one(text), lang);
}

Formula parse_formula(std::string_view text, const Language& lang) {
  return formula_from_sexpr(sexpr::parse_one(text), lang);
}

}  // namespace bvl
