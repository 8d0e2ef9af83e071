#include "bvl/proof.hpp"

#include <algorithm>

#include "bvl/error.hpp"

namespace bvl::kernel {

// ---------------------------------------------------------------------------
// Context

Context::Context(std::initializer_list<Formula> formulas) : Context(std::vector<Formula>(formulas)) {}

Context::Context(std::vector<Formula> formulas) : items_(std::move(formulas)) {
  std::sort(items_.begin(), items_.end());
  items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
}

bool Context::contains(const Formula& f) const {
  return std::binary_search(items_.begin(), items_.end(), f);
}

Context Context::with(const Formula& f) const {
  if (contains(f)) return *this;
  Context out = *this;
  out.items_.insert(std::lower_bound(out.items_.begin(), out.items_.end(), f), f);
  return out;
}

Context Context::merged(const Context& other) const {
  std::vector<Formula> all = items_;
  all.insert(all.end(), other.items_.begin(), other.items_.end());
  return Context(std::move(all));
}

Context Context::lifted() const {
  std::vector<Formula> out;
  out.reserve(items_.size());
  for (const auto& f : items_) out.push_back(lift(f, 1, 0));
  return Context(std::move(out));
}

// ---------------------------------------------------------------------------
// Proof construction

namespace {

void require_formula(const Formula& f, std::string_view rule) {
  if (f.arity() != 0) {
    fail(ErrorCode::Invalid, std::string(rule) + ": annotation must be a formula (arity 0)");
  }
}

void require_term(const Term& t, std::string_view rule) {
  if (t.arity() != 0) {
    fail(ErrorCode::Invalid, std::string(rule) + ": annotation must be a term (arity 0)");
  }
}

}  // namespace

Proof Proof::axm(const Formula& f) {
  require_formula(f, "axm");
  return Proof(std::make_shared<const Node>(Node{Rule::Axm, f, {}, {}, {}}));
}

Proof Proof::imp_intro(const Formula& a, Proof sub) {
  require_formula(a, "impI");
  return Proof(std::make_shared<const Node>(Node{Rule::ImpI, a, {}, {}, {std::move(sub)}}));
}

Proof Proof::imp_elim(const Formula& a, Proof implication, Proof argument) {
  require_formula(a, "impE");
  return Proof(std::make_shared<const Node>(
      Node{Rule::ImpE, a, {}, {}, {std::move(implication), std::move(argument)}}));
}

Proof Proof::falsum_elim(const Formula& f, Proof sub) {
  require_formula(f, "falsumE");
  return Proof(std::make_shared<const Node>(Node{Rule::FalsumE, f, {}, {}, {std::move(sub)}}));
}

Proof Proof::all_intro(Proof sub) {
  return Proof(std::make_shared<const Node>(Node{Rule::AllI, {}, {}, {}, {std::move(sub)}}));
}

Proof Proof::all_elim(const Formula& body, const Term& t, Proof sub) {
  require_formula(body, "allE");
  require_term(t, "allE");
  return Proof(std::make_shared<const Node>(Node{Rule::AllE, body, {}, t, {std::move(sub)}}));
}

Proof Proof::ref(const Term& t) {
  require_term(t, "ref");
  return Proof(std::make_shared<const Node>(Node{Rule::Ref, {}, {}, t, {}}));
}

Proof Proof::subst2(const Term& s, const Term& t, const Formula& f, Proof equality, Proof sub) {
  require_term(s, "subst2");
  require_term(t, "subst2");
  require_formula(f, "subst2");
  return Proof(std::make_shared<const Node>(
      Node{Rule::Subst2, f, s, t, {std::move(equality), std::move(sub)}}));
}

std::size_t Proof::size() const {
  std::size_t n = 1;
  for (const auto& p : premises()) n += p.size();
  return n;
}

std::string_view rule_name(Proof::Rule rule) {
  switch (rule) {
    case Proof::Rule::Axm: return "axm";
    case Proof::Rule::ImpI: return "impI";
    case Proof::Rule::ImpE: return "impE";
    case Proof::Rule::FalsumE: return "falsumE";
    case Proof::Rule::AllI: return "allI";
    case Proof::Rule::AllE: return "allE";
    case Proof::Rule::Ref: return "ref";
    case Proof::Rule::Subst2: return "subst2";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Checking

namespace {

CheckResult reject(std::string path, std::string reason) {
  return CheckResult{false, std::move(path), std::move(reason)};
}

CheckResult check_at(const Proof& proof, const Context& ctx, const Formula& goal,
                     const std::string& prefix) {
  const std::string here = prefix + std::string(rule_name(proof.rule()));
  auto child = [&](std::size_t i) { return here + "/" + std::to_string(i) + ":"; };

  switch (proof.rule()) {
    case Proof::Rule::Axm:
      if (proof.formula() != goal) return reject(here, "axiom formula differs from goal");
      if (!ctx.contains(goal)) return reject(here, "goal is not a hypothesis");
      return {};

    case Proof::Rule::ImpI:
      if (goal.kind() != Formula::Kind::Imp) return reject(here, "goal is not an implication");
      if (goal.lhs() != proof.formula()) return reject(here, "annotated antecedent differs from goal");
      return check_at(proof.premises()[0], ctx.with(goal.lhs()), goal.rhs(), child(0));

    case Proof::Rule::ImpE: {
      const auto& a = proof.formula();
      if (auto r = check_at(proof.premises()[0], ctx, Formula::imp(a, goal), child(0)); !r) return r;
      return check_at(proof.premises()[1], ctx, a, child(1));
    }

    case Proof::Rule::FalsumE:
      if (proof.formula() != goal) return reject(here, "annotated formula differs from goal");
      return check_at(proof.premises()[0], ctx.with(not_(goal)), Formula::falsum(), child(0));

    case Proof::Rule::AllI:
      if (goal.kind() != Formula::Kind::All) return reject(here, "goal is not universally quantified");
      return check_at(proof.premises()[0], ctx.lifted(), goal.body(), child(0));

    case Proof::Rule::AllE:
      if (subst(proof.formula(), proof.term(), 0) != goal) {
        return reject(here, "instantiated body differs from goal");
      }
      return check_at(proof.premises()[0], ctx, Formula::all(proof.formula()), child(0));

    case Proof::Rule::Ref:
      if (goal != Formula::equal(proof.term(), proof.term())) {
        return reject(here, "goal is not t = t for the annotated t");
      }
      return {};

    case Proof::Rule::Subst2: {
      const auto& f = proof.formula();
      if (subst(f, proof.term(), 0) != goal) return reject(here, "f[t // 0] differs from goal");
      auto eq = Formula::equal(proof.left_term(), proof.term());
      if (auto r = check_at(proof.premises()[0], ctx, eq, child(0)); !r) return r;
      return check_at(proof.premises()[1], ctx, subst(f, proof.left_term(), 0), child(1));
    }
  }
  return reject(here, "unknown rule");
}

}  // namespace

CheckResult check(const Proof& proof, const Context& ctx, const Formula& goal) {
  if (goal.arity() != 0) return reject("", "goal is not a formula (arity > 0)");
  return check_at(proof, ctx, goal, "");
}

// ---------------------------------------------------------------------------
// Search

namespace {

class Searcher {
 public:
  std::optional<Proof> prove(const Context& ctx, const Formula& goal, std::size_t depth) {
    if (depth == 0) return std::nullopt;
    if (ctx.contains(goal)) return Proof::axm(goal);

    if (goal.kind() == Formula::Kind::Equal && goal.left_term() == goal.right_term()) {
      return Proof::ref(goal.left_term());
    }
    if (goal.kind() == Formula::Kind::Imp) {
      if (auto sub = prove(ctx.with(goal.lhs()), goal.rhs(), depth - 1)) {
        return Proof::imp_intro(goal.lhs(), std::move(*sub));
      }
    }
    if (goal.kind() == Formula::Kind::All) {
      if (auto sub = prove(ctx.lifted(), goal.body(), depth - 1)) {
        return Proof::all_intro(std::move(*sub));
      }
    }
    if (auto p = from_hypotheses(ctx, goal, depth)) return p;

    auto negated = not_(goal);
    if (goal.kind() != Formula::Kind::Falsum && !ctx.contains(negated)) {
      if (auto sub = prove(ctx.with(negated), Formula::falsum(), depth - 1)) {
        return Proof::falsum_elim(goal, std::move(*sub));
      }
    }
    return std::nullopt;
  }

 private:
  // Uses a hypothesis of the shape A1 -> ... -> An -> goal by proving each Ai.
  std::optional<Proof> from_hypotheses(const Context& ctx, const Formula& goal, std::size_t depth) {
    for (const auto& h : ctx) {
      std::vector<Formula> premises;
      Formula cur = h;
      while (cur.kind() == Formula::Kind::Imp && cur != goal) {
        premises.push_back(cur.lhs());
        cur = cur.rhs();
      }
      if (cur != goal || premises.empty()) continue;
      // Building the chain costs one impE per premise.
      if (depth <= premises.size()) continue;
      std::size_t budget = depth - premises.size();
      Proof acc = Proof::axm(h);
      bool ok = true;
      for (const auto& a : premises) {
        auto arg = prove(ctx, a, budget);
        if (!arg) {
          ok = false;
          break;
        }
        acc = Proof::imp_elim(a, std::move(acc), std::move(*arg));
      }
      if (ok) return acc;
    }
    return std::nullopt;
  }
};

}  // namespace

std::optional<Proof> provable_search(const Context& ctx, const Formula& goal, std::size_t depth) {
  require_size(depth <= kMaxSearchDepth,
               "provable_search: depth " + std::to_string(depth) + " exceeds 12");
  if (goal.arity() != 0) return std::nullopt;
  auto proof = Searcher{}.prove(ctx, goal, depth);
  if (proof && !check(*proof, ctx, goal)) return std::nullopt;
  return proof;
}

// ---------------------------------------------------------------------------
// S-expressions

namespace {

void write(std::string& out, const Proof& p, const Language& lang) {
  out += '(';
  out += rule_name(p.rule());
  switch (p.rule()) {
    case Proof::Rule::Axm:
    case Proof::Rule::ImpI:
    case Proof::Rule::ImpE:
    case Proof::Rule::FalsumE:
      out += ' ' + to_sexpr(p.formula(), lang);
      break;
    case Proof::Rule::AllI: break;
    case Proof::Rule::AllE:
      out += ' ' + to_sexpr(p.formula(), lang) + ' ' + to_sexpr(p.term(), lang);
      break;
    case Proof::Rule::Ref: out += ' ' + to_sexpr(p.term(), lang); break;
    case Proof::Rule::Subst2:
      out += ' ' + to_sexpr(p.left_term(), lang) + ' ' + to_sexpr(p.term(), lang) + ' ' +
             to_sexpr(p.formula(), lang);
      break;
  }
  for (const auto& sub : p.premises()) {
    out += ' ';
    write(out, sub, lang);
  }
  out += ')';
}

}  // namespace

std::string to_sexpr(const Proof& proof, const Language& lang) {
  std::string out;
  write(out, proof, lang);
  return out;
}

Proof proof_from_sexpr(const sexpr::Node& node, const Language& lang) {
  if (!node.is_list || node.items.empty() || node.items.front().is_list) {
    sexpr::error_at(node, "expected a proof node");
  }
  const auto& head = node.items.front().atom;
  auto expect = [&](std::size_t operands) {
    if (node.items.size() != operands + 1) {
      sexpr::error_at(node, "'" + head + "' expects " + std::to_string(operands) + " operand(s)");
    }
  };
  auto formula = [&](std::size_t i) { return formula_from_sexpr(node.items[i], lang); };
  auto term = [&](std::size_t i) { return term_from_sexpr(node.items[i], lang); };
  auto proof = [&](std::size_t i) { return proof_from_sexpr(node.items[i], lang); };

  try {
    if (head == "axm") {
      expect(1);
      return Proof::axm(formula(1));
    }
    if (head == "impI") {
      expect(2);
      return Proof::imp_intro(formula(1), proof(2));
    }
    if (head == "impE") {
      expect(3);
      return Proof::imp_elim(formula(1), proof(2), proof(3));
    }
    if (head == "falsumE") {
      expect(2);
      return Proof::falsum_elim(formula(1), proof(2));
    }
    if (head == "allI") {
      expect(1);
      return Proof::all_intro(proof(1));
    }
    if (head == "allE") {
      expect(3);
      return Proof::all_elim(formula(1), term(2), proof(3));
    }
    if (head == "ref") {
      expect(1);
      return Proof::ref(term(1));
    }
    if (head == "subst2") {
      expect(5);
      return Proof::subst2(term(1), term(2), formula(3), proof(4), proof(5));
    }
  } catch (const Error& e) {
    if (e.code() == ErrorCode::Parse) throw;
    sexpr::error_at(node, e.what());
  }
  sexpr::error_at(node, "unknown proof rule '" + head + "'");
}

Proof parse_proof(std::string_view text, const Language& lang) {
  return proof_from_sexpr(sexpr::parse_one(text), lang);
}

Context parse_context(std::string_view text, const Language& lang) {
  std::vector<Formula> formulas;
  for (const auto& node : sexpr::parse_all(text)) formulas.push_back(formula_from_sexpr(node, lang));
  return Context(std::move(formulas));
}

}  // namespace bvl::kernel
