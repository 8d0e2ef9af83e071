#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bvl/sexpr.hpp"

namespace bvl {

/// A function or relation symbol, identified by its arity and its position
/// among the symbols of that arity. Formula values never mention names.
struct SymbolRef {
  std::size_t arity = 0;
  std::size_t index = 0;

  friend auto operator<=>(const SymbolRef&, const SymbolRef&) = default;
};

/// Function and relation symbols stratified by arity. Names are unique
/// across the whole language.
class Language {
 public:
  Language() = default;
  explicit Language(std::string name) : name_(std::move(name)) {}

  SymbolRef add_function(std::string name, std::size_t arity);
  SymbolRef add_relation(std::string name, std::size_t arity);

  const std::string& name() const { return name_; }

  const std::map<std::size_t, std::vector<std::string>>& functions() const { return functions_; }
  const std::map<std::size_t, std::vector<std::string>>& relations() const { return relations_; }

  bool has_function(SymbolRef symbol) const;
  bool has_relation(SymbolRef symbol) const;
  const std::string& function_name(SymbolRef symbol) const;
  const std::string& relation_name(SymbolRef symbol) const;
  std::optional<SymbolRef> find_function(std::string_view name) const;
  std::optional<SymbolRef> find_relation(std::string_view name) const;

  /// All symbols in (arity, index) order.
  std::vector<SymbolRef> function_symbols() const;
  std::vector<SymbolRef> relation_symbols() const;

  /// Text form: one `func NAME ARITY` or `rel NAME ARITY` per line, in
  /// declaration order within each arity.
  std::string to_text() const;
  static Language from_text(std::string_view text, std::string name = {});

  friend bool operator==(const Language&, const Language&) = default;

 private:
  bool name_taken(std::string_view name) const;

  std::string name_;
  std::map<std::size_t, std::vector<std::string>> functions_;
  std::map<std::size_t, std::vector<std::string>> relations_;
};

namespace detail {
struct TermNode;
struct FormulaNode;
}  // namespace detail

/// Partially applied term. `arity()` is the number of arguments still
/// missing; a term proper has arity 0. Values are immutable and share
/// structure.
class Term {
 public:
  enum class Kind : std::uint8_t { Var, Func, App };

  static Term var(std::size_t index);
  static Term func(SymbolRef symbol);
  /// Throws Error(Invalid) unless head.arity() >= 1 and arg.arity() == 0.
  static Term app(const Term& head, const Term& arg);

  Kind kind() const;
  std::size_t var_index() const;
  SymbolRef symbol() const;
  Term head() const;
  Term arg() const;

  std::size_t arity() const;
  /// Number of syntax nodes.
  std::size_t size() const;
  /// Least l such that the term is bounded by l.
  std::size_t free_bound() const;
  std::size_t hash() const;
  const void* identity() const { return node_.get(); }

  friend bool operator==(const Term& a, const Term& b);
  friend std::strong_ordering operator<=>(const Term& a, const Term& b);

 private:
  explicit Term(std::shared_ptr<const detail::TermNode> node) : node_(std::move(node)) {}
  friend struct detail::TermNode;
  friend class Formula;

  std::shared_ptr<const detail::TermNode> node_;
};

/// Partially applied formula. Implication and universal quantification are
/// the only primitive connective and quantifier.
class Formula {
 public:
  enum class Kind : std::uint8_t { Falsum, Equal, Rel, AppRel, Imp, All };

  static Formula falsum();
  /// Both sides must be terms (arity 0).
  static Formula equal(const Term& lhs, const Term& rhs);
  static Formula rel(SymbolRef symbol);
  /// head.arity() >= 1 and arg.arity() == 0.
  static Formula apprel(const Formula& head, const Term& arg);
  static Formula imp(const Formula& lhs, const Formula& rhs);
  static Formula all(const Formula& body);

  Kind kind() const;
  const Term& left_term() const;   // Equal
  const Term& right_term() const;  // Equal
  const Term& arg() const;         // AppRel
  SymbolRef symbol() const;        // Rel
  Formula head() const;            // AppRel
  Formula lhs() const;             // Imp
  Formula rhs() const;             // Imp
  Formula body() const;            // All

  std::size_t arity() const;
  std::size_t size() const;
  std::size_t free_bound() const;
  std::size_t hash() const;
  const void* identity() const { return node_.get(); }

  friend bool operator==(const Formula& a, const Formula& b);
  friend std::strong_ordering operator<=>(const Formula& a, const Formula& b);

 private:
  explicit Formula(std::shared_ptr<const detail::FormulaNode> node) : node_(std::move(node)) {}

  std::shared_ptr<const detail::FormulaNode> node_;
};

// Applies a symbol to a full argument list, left to right.
Term apply(SymbolRef function, std::span<const Term> args);
Term apply(SymbolRef function, std::initializer_list<Term> args);
Formula apply_rel(SymbolRef relation, std::span<const Term> args);
Formula apply_rel(SymbolRef relation, std::initializer_list<Term> args);

/// Increases every variable >= m (counted relative to the enclosing
/// quantifiers) by n.
Term lift(const Term& t, std::size_t n, std::size_t m = 0);
Formula lift(const Formula& f, std::size_t n, std::size_t m = 0);

/// Replaces the n-th free variable by s (lifted past the binders it moves
/// under) and closes the gap left behind.
Term subst(const Term& t, const Term& s, std::size_t n);
Formula subst(const Formula& f, const Term& s, std::size_t n);

inline bool bounded_by(const Term& t, std::size_t l) { return t.free_bound() <= l; }
inline bool bounded_by(const Formula& f, std::size_t l) { return f.free_bound() <= l; }

// Classical connectives, defined from -> and falsum.
Formula not_(const Formula& f);
Formula or_(const Formula& f, const Formula& g);
Formula and_(const Formula& f, const Formula& g);
Formula iff(const Formula& f, const Formula& g);
Formula ex(const Formula& f);

// Canonical S-expressions. Writing is bit-exact: single spaces, no newline.
std::string to_sexpr(const Term& t, const Language& lang);
std::string to_sexpr(const Formula& f, const Language& lang);
Term term_from_sexpr(const sexpr::Node& node, const Language& lang);
Formula formula_from_sexpr(const sexpr::Node& node, const Language& lang);
Term parse_term(std::string_view text, const Language& lang);
Formula parse_formula(std::string_view text, const Language& lang);

}  // namespace bvl

template <>
struct std::hash<bvl::Term> {
  std::size_t operator()(const bvl::Term& t) const noexcept { return t.hash(); }
};

template <>
struct std::hash<bvl::Formula> {
  std::size_t operator()(const bvl::Formula& f) const noexcept { return f.hash(); }
};
