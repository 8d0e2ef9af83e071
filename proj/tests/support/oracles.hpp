#pragma once

// Independent reference implementations used by the tests. Nothing here calls
// the library routine it is meant to check.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "bvl/boolalg.hpp"
#include "bvl/forcing.hpp"
#include "bvl/sets.hpp"
#include "bvl/syntax.hpp"

namespace oracle {

// ---- exhaustive syntax enumeration -------------------------------------

/// All preterms and preformulas of an exact size over the symbols of a
/// language, with variable indices below `vars` (the binders in scope plus
/// the free variables allowed).
class SyntaxEnumerator {
 public:
  explicit SyntaxEnumerator(const bvl::Language& lang);

  const std::vector<bvl::Term>& terms(std::size_t size, std::size_t vars, std::size_t arity);
  const std::vector<bvl::Formula>& formulas(std::size_t size, std::size_t vars, std::size_t arity);

  /// Formulas (arity 0) of size 1..max_size with at most `free` free variables.
  std::vector<bvl::Formula> formulas_up_to(std::size_t max_size, std::size_t free);
  /// Sentences of size 1..max_size.
  std::vector<bvl::Formula> sentences_up_to(std::size_t max_size) { return formulas_up_to(max_size, 0); }

 private:
  using Key = std::tuple<std::size_t, std::size_t, std::size_t>;
  std::vector<bvl::SymbolRef> functions_;
  std::vector<bvl::SymbolRef> relations_;
  std::size_t max_arity_ = 0;
  std::map<Key, std::vector<bvl::Term>> term_memo_;
  std::map<Key, std::vector<bvl::Formula>> formula_memo_;
};

// ---- named-variable syntax with capture-avoiding substitution ----------

struct NTerm {
  bvl::Term::Kind kind;
  std::string name;
  bvl::SymbolRef symbol{};
  std::vector<NTerm> kids;
};

struct NForm {
  bvl::Formula::Kind kind;
  std::string binder;
  bvl::SymbolRef symbol{};
  std::vector<NTerm> terms;
  std::vector<NForm> kids;
};

/// `free[i]` names de Bruijn variable i at the top. Binders get the first
/// name x0, x1, ... that does not occur free in their body, so binder names
/// routinely coincide with free names elsewhere.
NTerm to_named(const bvl::Term& t, const std::vector<std::string>& free);
NForm to_named(const bvl::Formula& f, const std::vector<std::string>& free);
bvl::Term from_named(const NTerm& t, const std::vector<std::string>& free);
bvl::Formula from_named(const NForm& f, const std::vector<std::string>& free);

NForm named_subst(const NForm& f, const std::string& x, const NTerm& s);

/// lift and subst computed by renaming through named syntax.
bvl::Formula lift_by_renaming(const bvl::Formula& f, std::size_t n, std::size_t m);
bvl::Formula subst_by_renaming(const bvl::Formula& f, const bvl::Term& s, std::size_t n);

// ---- two-valued Tarski semantics ---------------------------------------

struct ClassicalModel {
  std::size_t carrier = 1;
  /// Row-major tables, first argument most significant.
  std::map<bvl::SymbolRef, std::vector<std::size_t>> functions;
  std::map<bvl::SymbolRef, std::vector<bool>> relations;
};

/// Truth of a formula under `env`, where env.back() is variable 0.
bool classical_truth(const ClassicalModel& m, const bvl::Formula& f, std::vector<std::size_t>& env);
bool classical_truth(const ClassicalModel& m, const bvl::Formula& sentence);

// ---- sets ---------------------------------------------------------------

/// Every BSet of rank <= max_rank with at most `width` entries per node,
/// values ranging over the whole algebra.
std::vector<bvl::sets::BSet> enumerate_bsets(std::shared_ptr<const bvl::boolalg::FinCBA> alg,
                                             std::size_t max_rank, std::size_t width);

/// Every PSet of rank <= max_rank with at most `width` children per node.
std::vector<bvl::sets::PSet> enumerate_psets(std::size_t max_rank, std::size_t width);

/// Hereditarily sorted, duplicate-free rendering: equal iff extensionally
/// equal.
std::string canonical(const bvl::sets::PSet& x);

// ---- sunflowers ---------------------------------------------------------

/// First `target` indices (lexicographic) whose pairwise intersections all
/// coincide, by trying every combination.
std::optional<std::vector<std::size_t>> exhaustive_sunflower(const bvl::forcing::SetFamily& family,
                                                             std::size_t target);

}  // namespace oracle
