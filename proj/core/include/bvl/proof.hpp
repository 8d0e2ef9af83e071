#pragma once

#include <cstddef>
#include <initializer_list>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bvl/sexpr.hpp"
#include "bvl/syntax.hpp"

namespace bvl::kernel {

/// A finite set of hypotheses. Kept sorted and duplicate-free, so two
/// contexts with the same members compare equal.
class Context {
 public:
  Context() = default;
  Context(std::initializer_list<Formula> formulas);
  explicit Context(std::vector<Formula> formulas);

  bool contains(const Formula& f) const;
  Context with(const Formula& f) const;
  Context merged(const Context& other) const;
  /// Every member lifted by one, as required under a universal introduction.
  Context lifted() const;

  const std::vector<Formula>& formulas() const { return items_; }
  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  auto begin() const { return items_.begin(); }
  auto end() const { return items_.end(); }

  friend bool operator==(const Context&, const Context&) = default;

 private:
  std::vector<Formula> items_;
};

/// A natural-deduction derivation. Every node carries the annotations needed
/// to check it without search: elimination rules record the formulas and
/// terms that the conclusion alone does not determine.
class Proof {
 public:
  enum class Rule { Axm, ImpI, ImpE, FalsumE, AllI, AllE, Ref, Subst2 };

  static Proof axm(const Formula& f);
  /// Concludes `a -> B` from a derivation of B under the extra hypothesis a.
  static Proof imp_intro(const Formula& a, Proof sub);
  /// Concludes B from derivations of `a -> B` and of a.
  static Proof imp_elim(const Formula& a, Proof implication, Proof argument);
  /// Concludes f from a derivation of falsum under the hypothesis `not f`.
  static Proof falsum_elim(const Formula& f, Proof sub);
  static Proof all_intro(Proof sub);
  /// Concludes body[t // 0] from a derivation of `all body`.
  static Proof all_elim(const Formula& body, const Term& t, Proof sub);
  static Proof ref(const Term& t);
  /// Concludes f[t // 0] from derivations of `s = t` and f[s // 0].
  static Proof subst2(const Term& s, const Term& t, const Formula& f, Proof equality, Proof sub);

  Rule rule() const { return node_->rule; }
  /// The formula annotation (axm, impI, impE, falsumE, allE body, subst2 motive).
  const Formula& formula() const { return *node_->formula; }
  /// The witness term of allE and ref, or t of subst2.
  const Term& term() const { return *node_->t; }
  /// s of subst2.
  const Term& left_term() const { return *node_->s; }
  const std::vector<Proof>& premises() const { return node_->premises; }

  /// Number of rule applications.
  std::size_t size() const;

 private:
  struct Node {
    Rule rule;
    std::optional<Formula> formula;
    std::optional<Term> s;
    std::optional<Term> t;
    std::vector<Proof> premises;
  };
  explicit Proof(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

std::string_view rule_name(Proof::Rule rule);

struct CheckResult {
  bool ok = true;
  /// Slash-separated path from the root to the first failing node, e.g.
  /// `impI/0:impE/1:axm`.
  std::string path;
  std::string reason;

  explicit operator bool() const { return ok; }
};

/// Decides whether `proof` derives `goal` from `ctx`. Never throws.
CheckResult check(const Proof& proof, const Context& ctx, const Formula& goal);

constexpr std::size_t kMaxSearchDepth = 12;

/// Bounded backward proof search. A returned tree always passes `check`;
/// absence only means the search gave up. Error(SizeGuard) if depth > 12.
std::optional<Proof> provable_search(const Context& ctx, const Formula& goal, std::size_t depth);

std::string to_sexpr(const Proof& proof, const Language& lang);
Proof proof_from_sexpr(const sexpr::Node& node, const Language& lang);
Proof parse_proof(std::string_view text, const Language& lang);

/// A context file holds zero or more formula S-expressions.
Context parse_context(std::string_view text, const Language& lang);

}  // namespace bvl::kernel
