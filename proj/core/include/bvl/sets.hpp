#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "bvl/boolalg.hpp"

namespace bvl::sets {

using boolalg::Elem;
using boolalg::FinCBA;

/// Hereditarily finite set presented as an indexed family of children.
/// Duplicates and order are significant for the value, not for pset_equiv.
class PSet {
 public:
  PSet() = default;
  explicit PSet(std::vector<PSet> children) : children_(std::move(children)) {}

  const std::vector<PSet>& children() const { return children_; }
  std::size_t width() const { return children_.size(); }
  /// 0 for the empty set.
  std::size_t rank() const;

  friend bool operator==(const PSet&, const PSet&) = default;

 private:
  std::vector<PSet> children_;
};

/// Extensional equivalence, by the double forall-exists recursion.
bool pset_equiv(const PSet& x, const PSet& y);
/// Some child of y is equivalent to x.
bool pset_mem(const PSet& x, const PSet& y);

/// Von Neumann natural n; n <= 8.
PSet ordinal_mk(std::size_t n);

std::string to_sexpr(const PSet& x);
PSet parse_pset(std::string_view text);

struct BEntry;

/// A set whose members carry truth values in a finite Boolean algebra.
/// Immutable; copies share structure.
class BSet {
 public:
  /// The empty set over `algebra`.
  explicit BSet(std::shared_ptr<const FinCBA> algebra);
  /// Error(AlgebraMismatch) unless all children and values use `algebra`.
  BSet(std::shared_ptr<const FinCBA> algebra, std::vector<BEntry> entries);

  const FinCBA& algebra() const { return *node_->algebra; }
  const std::shared_ptr<const FinCBA>& algebra_ptr() const { return node_->algebra; }
  const std::vector<BEntry>& entries() const { return node_->entries; }
  std::size_t width() const;
  std::size_t rank() const;
  const void* identity() const { return node_.get(); }

  /// Structural equality (same children in the same order, same values).
  friend bool operator==(const BSet& a, const BSet& b);

 private:
  struct Node {
    std::shared_ptr<const FinCBA> algebra;
    std::vector<BEntry> entries;
  };
  std::shared_ptr<const Node> node_;
};

struct BEntry {
  BSet child;
  Elem bval;
};

bool same_algebra(const FinCBA& a, const FinCBA& b);

/// Memo table for bv_eq keyed by node identity. Only valid while every set
/// passed through it stays alive.
class EqCache {
 public:
  std::optional<Elem> find(const BSet& x, const BSet& y) const;
  void store(const BSet& x, const BSet& y, Elem value);
  std::size_t size() const { return table_.size(); }

 private:
  struct Hash {
    std::size_t operator()(const std::pair<const void*, const void*>& p) const noexcept {
      return std::hash<const void*>{}(p.first) * 31 ^ std::hash<const void*>{}(p.second);
    }
  };
  std::unordered_map<std::pair<const void*, const void*>, Elem, Hash> table_;
};

/// Boolean-valued equality; Error(AlgebraMismatch) across algebras.
Elem bv_eq(const BSet& x, const BSet& y);
Elem bv_eq(const BSet& x, const BSet& y, EqCache& cache);

/// Join over y's entries of bval meet bv_eq(x, child).
Elem bv_mem(const BSet& x, const BSet& y);
Elem bv_mem(const BSet& x, const BSet& y, EqCache& cache);

/// Meet over x's entries of bval implies bv_mem(child, y).
Elem bv_subset(const BSet& x, const BSet& y);
Elem bv_subset(const BSet& x, const BSet& y, EqCache& cache);

/// Same tree as x with every value top.
BSet check(const PSet& x, std::shared_ptr<const FinCBA> algebra);

/// One entry per indicator function on x's positions, position 0 most
/// significant and algebra indices ascending. Each child is x with its values
/// replaced by the indicator; its value is bv_subset(child, x). At most 4
/// entries and an algebra of at most 16 elements.
BSet bv_powerset(const BSet& x);

using Predicate = std::function<Elem(const BSet&)>;

struct BExtResult {
  bool ok = true;
  /// Positions (i, j) in the universe with eq(u_i, u_j) & phi(u_i) not <= phi(u_j).
  std::optional<std::pair<std::size_t, std::size_t>> witness;

  explicit operator bool() const { return ok; }
};

/// Checks bv_eq(x, y) & phi(x) <= phi(y) over all ordered pairs of the given
/// universe only.
BExtResult b_ext_check(const Predicate& phi, std::span<const BSet> universe);

struct ComprehensionResult {
  BSet set;
  /// bv_subset(set, x).
  Elem subset_value;
  /// Per test element z: (z in set) <-> (z in x & phi z).
  std::vector<Elem> membership_values;
  /// gamma lies below every value above.
  bool verified = false;
};

/// The subset of x cut out by phi: each value b becomes b & phi(child).
/// Error(Precondition) if phi fails the congruence check on the test universe
/// together with x's children.
ComprehensionResult comprehension(const BSet& x, const Predicate& phi, Elem gamma,
                                  std::span<const BSet> test_universe);

/// Concatenates the parts' entries, each value cut down by its weight.
/// Weights must be pairwise disjoint; Error(Precondition) otherwise.
BSet mixture(std::shared_ptr<const FinCBA> algebra, std::span<const std::pair<Elem, BSet>> parts);

/// `(bset NAME ((bset NAME) INDEX) ...)` with NAME the algebra name and INDEX
/// an element index.
std::string to_sexpr(const BSet& x);
/// Error(AlgebraMismatch) if a NAME differs from the given algebra's name.
BSet parse_bset(std::string_view text, std::shared_ptr<const FinCBA> algebra);

}  // namespace bvl::sets
