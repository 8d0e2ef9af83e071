#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bvl/semantics.hpp"
#include "bvl/syntax.hpp"

namespace bvl::zfc {

/// The set-theory language: constants empty and omega, unary P and U, binary
/// pair, binary membership.
const Language& lzfc();

struct Symbols {
  SymbolRef empty, omega, power, union_, pair, in;
};
const Symbols& symbols();

/// Surface terms: names, constants and applications.
struct NamedTerm {
  enum class Kind { Name, Empty, Omega, Power, Union, Pair };
  Kind kind = Kind::Name;
  std::string name;
  std::vector<NamedTerm> args;
  std::size_t line = 1, column = 1;

  friend bool operator==(const NamedTerm& a, const NamedTerm& b) {
    return a.kind == b.kind && a.name == b.name && a.args == b.args;
  }
};

/// Surface formulas with named variables. Forall/Exists bind `var`; when
/// `bound` is non-empty the quantifier ranges over members of bound[0].
struct NamedFormula {
  enum class Kind { False, In, Eq, Subset, Leq, Ord, Not, And, Or, Imp, Iff, Forall, Exists };
  Kind kind = Kind::False;
  std::vector<NamedTerm> terms;
  std::vector<NamedFormula> subs;
  std::string var;
  std::vector<NamedTerm> bound;
  std::size_t line = 1, column = 1;

  friend bool operator==(const NamedFormula& a, const NamedFormula& b) {
    return a.kind == b.kind && a.terms == b.terms && a.subs == b.subs && a.var == b.var &&
           a.bound == b.bound;
  }
};

/// Grammar, loosest first: `<->`, `->` (both right associative), `or`,
/// `and`, then `not`, quantifiers `forall x y.` / `exists x.` optionally
/// bounded `forall x in t.` (the body extends as far right as possible), and
/// atoms `false`, `t in t`, `t = t`, `t subset t`, `t <= t`, `Ord(t)`,
/// parentheses. Terms: names, `empty`, `omega`, `P(t)`, `U(t)`,
/// `pair(t,t)`. `--` starts a comment. The UTF-8 symbols of the usual
/// notation are accepted as synonyms. Error(Parse) with line:column.
NamedFormula parse(std::string_view text);
NamedTerm parse_named_term(std::string_view text);

/// Replaces `subset`, `<=` and `Ord` by their definitions, renaming bound
/// variables apart with names containing '#'. Expanding twice equals
/// expanding once.
NamedFormula expand_definitions(const NamedFormula& f);

/// The definitions used by expand_definitions: name, parameters, body in
/// surface syntax.
struct Definition {
  std::string name;
  std::vector<std::string> params;
  std::string body;
};
const std::vector<Definition>& definition_table();

/// De Bruijn form over lzfc(). Names not bound by a quantifier must appear in
/// `free_names`, where free_names[j] becomes the j-th free variable; the
/// empty list demands a sentence. Error(Parse) for unbound names.
Formula elaborate(const NamedFormula& f, const std::vector<std::string>& free_names = {});
Term elaborate_term(const NamedTerm& t, const std::vector<std::string>& free_names = {});

/// Surface text for a formula over lzfc(). Binders are named v0, v1, ... by
/// depth and free variable j at depth d prints as f<j>. Negation,
/// disjunction, conjunction, biconditional and the existential quantifier
/// are recognised from their exact encodings, so parsing and elaborating the
/// output gives back the same formula. Error(Invalid) for preformulas.
std::string print(const Formula& f);
std::string print(const Term& t);

/// Free variable names f0..f(n-1) matching print's convention.
std::vector<std::string> printed_free_names(std::size_t count);

/// The fixed axioms in order: emptyset, ordered_pairs, extensionality,
/// union, powerset, infinity, regularity, zorns_lemma.
const std::vector<std::pair<std::string, std::string>>& axiom_sources();

/// Collection for a formula phi whose free names are among x, y and the
/// given parameters (quantified outermost, in order). Error(Invalid) for
/// any other free name or a parameter named x, y, A or B.
NamedFormula collection_schema(const NamedFormula& phi, const std::vector<std::string>& params);
Formula collection_instance(std::string_view phi, const std::vector<std::string>& params = {});

/// The fixed axioms followed by two collection instances, collection_eq
/// (phi: x = y) and collection_pair (phi: pair(x, p) in y).
std::vector<std::pair<std::string, Formula>> zfc_axioms();
Formula axiom(std::string_view name);

/// Surface text of CH: forall x. Ord(x) -> x <= omega or P(omega) <= x.
std::string_view ch_source();
Formula ch_sentence();

/// Two-valued structure on 0 = empty and 1 = {empty} with true membership
/// and discrete equality. empty and U are exact; omega, P(1) and pair leave
/// the carrier and are sent to fixed stand-ins, so only sentences avoiding
/// them (emptyset, extensionality, regularity) say something true about
/// these two sets.
semantics::BStructure sanity_structure();

}  // namespace bvl::zfc
