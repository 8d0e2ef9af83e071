#pragma once

#include <cstddef>
#include <memory>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "bvl/boolalg.hpp"
#include "bvl/proof.hpp"
#include "bvl/syntax.hpp"

namespace bvl::semantics {

using boolalg::Elem;
using boolalg::FinCBA;

/// A finite structure whose relations and equality take values in a finite
/// Boolean algebra. Carrier elements are 0..carrier_size()-1.
///
/// Tables are stored row-major with the first argument most significant.
/// A fresh structure interprets every function as constant 0, every relation
/// as bottom and equality as the discrete relation.
class BStructure {
 public:
  /// Error(Invalid) for an empty carrier.
  BStructure(Language language, std::shared_ptr<const FinCBA> algebra, std::size_t carrier_size);

  const Language& language() const { return language_; }
  const FinCBA& algebra() const { return *algebra_; }
  const std::shared_ptr<const FinCBA>& algebra_ptr() const { return algebra_; }
  std::size_t carrier_size() const { return carrier_size_; }

  void set_function(SymbolRef symbol, std::vector<std::size_t> table);
  void set_relation(SymbolRef symbol, std::vector<Elem> table);
  /// carrier_size^2 entries, row x column y holds x ~ y.
  void set_equality(std::vector<Elem> table);

  std::size_t apply_function(SymbolRef symbol, std::span<const std::size_t> args) const;
  Elem apply_relation(SymbolRef symbol, std::span<const std::size_t> args) const;
  Elem equality(std::size_t x, std::size_t y) const { return eq_[x * carrier_size_ + y]; }

  const std::vector<std::size_t>& function_table(SymbolRef symbol) const;
  const std::vector<Elem>& relation_table(SymbolRef symbol) const;

  /// Text form: `language REF`, `algebra REF`, `carrier N`, then `eq` and one
  /// `func NAME` / `rel NAME` block per symbol. Blocks hold carrier^(arity-1)
  /// rows of carrier entries (a single entry for arity 0); function entries
  /// are carrier indices, all others algebra element indices.
  std::string to_text(const std::string& language_ref, const std::string& algebra_ref) const;

 private:
  std::size_t table_size(std::size_t arity) const;
  std::size_t offset(std::size_t arity, std::span<const std::size_t> args) const;

  Language language_;
  std::shared_ptr<const FinCBA> algebra_;
  std::size_t carrier_size_;
  std::vector<std::vector<std::size_t>> functions_;  // by function_symbols() order
  std::vector<std::vector<Elem>> relations_;         // by relation_symbols() order
  std::vector<Elem> eq_;
  std::vector<SymbolRef> function_symbols_;
  std::vector<SymbolRef> relation_symbols_;
};

/// Parses the body of a structure file once the header references have been
/// resolved by the caller. `text` is the full file; the header lines are
/// skipped.
BStructure parse_structure(std::string_view text, Language language,
                           std::shared_ptr<const FinCBA> algebra);

struct StructureHeader {
  std::string language_ref;
  std::string algebra_ref;
};
StructureHeader parse_structure_header(std::string_view text);

struct Diagnostic {
  bool ok = true;
  /// Law family and the offending elements of the first failure.
  std::string failure;

  explicit operator bool() const { return ok; }
};

/// Exhaustively checks reflexivity, symmetry and transitivity of the graded
/// equality and congruence of every function and relation symbol. Carrier at
/// most 32, algebra at most 2^8 elements.
Diagnostic validate_structure(const BStructure& s);

/// Assignment of carrier elements to free variables; entry i is variable i.
using Assignment = std::vector<std::size_t>;

/// Value of a partially applied term at the given remaining arguments.
std::size_t realize_term(const BStructure& s, const Term& t, const Assignment& v,
                         std::span<const std::size_t> args = {});

/// Truth value of a partially applied formula. Quantifiers range over the
/// carrier; results are memoised per (subformula, relevant assignment).
Elem realize_formula(const BStructure& s, const Formula& f, const Assignment& v,
                     std::span<const std::size_t> args = {});

/// Value of a sentence.
Elem realize(const BStructure& s, const Formula& sentence);

/// gamma <= value of the sentence.
bool forces(const BStructure& s, Elem gamma, const Formula& sentence);

struct SoundnessReport {
  bool holds = true;
  /// Infimum of the hypotheses' values.
  Elem hypotheses;
  Elem conclusion;
};

/// Checks inf of the context values <= value of the goal. Preconditions (the
/// proof checks, everything is a sentence, the structure is valid) raise
/// Error(Precondition); a false `holds` would contradict soundness.
SoundnessReport validate_soundness(const BStructure& s, const kernel::Context& ctx,
                                   const Formula& goal, const kernel::Proof& proof);

/// Random structure that satisfies every validate_structure law. Per atom of
/// the algebra the graded equality is an equivalence closed under the
/// function tables; relation values are chosen per class.
BStructure generate_structure(const Language& language, std::shared_ptr<const FinCBA> algebra,
                              std::size_t carrier_size, std::mt19937_64& rng);

}  // namespace bvl::semantics
