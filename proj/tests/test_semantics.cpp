#include <doctest.h>

#include <random>

#include "bvl/error.hpp"
#include "bvl/fuzz.hpp"
#include "bvl/proof_corpus.hpp"
#include "bvl/semantics.hpp"
#include "support/oracles.hpp"

using namespace bvl;
using namespace bvl::semantics;

namespace {

std::shared_ptr<const FinCBA> powerset(std::size_t n) {
  return std::make_shared<const FinCBA>(FinCBA::powerset(n));
}

Language unary_lang() {
  Language l("unary");
  l.add_function("c", 0);
  l.add_function("g", 2);
  l.add_relation("U", 1);
  return l;
}

Term v(std::size_t i) { return Term::var(i); }

}  // namespace

TEST_SUITE("semantics") {

TEST_CASE("discrete equality is always valid") {
  auto lang = unary_lang();
  BStructure s(lang, powerset(2), 3);
  s.set_relation(*lang.find_relation("U"), {Elem{1}, Elem{2}, Elem{3}});
  s.set_function(*lang.find_function("g"), {0, 1, 2, 2, 1, 0, 1, 1, 1});
  CHECK(validate_structure(s));
}

TEST_CASE("broken laws are diagnosed") {
  auto lang = unary_lang();
  BStructure s(lang, powerset(2), 2);
  s.set_equality({Elem{3}, Elem{1}, Elem{0}, Elem{3}});
  auto d = validate_structure(s);
  CHECK_FALSE(d.ok);
  CHECK(d.failure.rfind("symmetry", 0) == 0);

  // eq(0,1) = {0}; U must then agree on the atom {0}. U(0) = {0,1}, U(1) = {1}
  // breaks congruence: eq(0,1) & U(0) = {0} is not below U(1).
  BStructure t(lang, powerset(2), 2);
  t.set_equality({Elem{3}, Elem{1}, Elem{1}, Elem{3}});
  t.set_function(*lang.find_function("g"), {0, 1, 1, 1});
  t.set_relation(*lang.find_relation("U"), {Elem{3}, Elem{3}});
  CHECK(validate_structure(t));
  t.set_relation(*lang.find_relation("U"), {Elem{3}, Elem{2}});
  d = validate_structure(t);
  CHECK_FALSE(d.ok);
  CHECK(d.failure.rfind("relation congruence", 0) == 0);

  BStructure r(lang, powerset(2), 2);
  r.set_equality({Elem{2}, Elem{0}, Elem{0}, Elem{3}});
  CHECK(validate_structure(r).failure.rfind("reflexivity", 0) == 0);
}

TEST_CASE("term realization") {
  auto lang = unary_lang();
  BStructure s(lang, powerset(1), 3);
  auto c = *lang.find_function("c");
  auto g = *lang.find_function("g");
  s.set_function(c, {2});
  // g(x, y) = (x + 2y) mod 3
  std::vector<std::size_t> table;
  for (std::size_t x = 0; x < 3; ++x)
    for (std::size_t y = 0; y < 3; ++y) table.push_back((x + 2 * y) % 3);
  s.set_function(g, table);
  CHECK(realize_term(s, v(0), {1}) == 1);
  CHECK(realize_term(s, Term::func(c), {}) == 2);
  // g(g(x, c), y) with x = 1, y = 0: g(1, 2) = 5 mod 3 = 2, then g(2, 0) = 2.
  auto t = apply(g, {apply(g, {v(0), Term::func(c)}), v(1)});
  CHECK(realize_term(s, t, {1, 0}) == 2);
  std::size_t args[] = {1};
  CHECK(realize_term(s, Term::app(Term::func(g), v(0)), {0}, args) == 2);
  CHECK_THROWS_AS(realize_term(s, v(2), {0, 0}), Error);
}

TEST_CASE("formula realization") {
  auto lang = unary_lang();
  BStructure s(lang, powerset(2), 2);
  const auto& b = s.algebra();
  CHECK(realize(s, Formula::falsum()) == b.bot());
  CHECK(realize(s, Formula::all(Formula::equal(v(0), v(0)))) == b.top());
  auto c = Term::func(*lang.find_function("c"));
  CHECK(realize(s, ex(Formula::equal(v(0), c))) == b.top());
  // U(0) = {0}, U(1) = {1}: (exists x. U x) = {0,1}, (forall x. U x) = {}.
  auto u = *lang.find_relation("U");
  s.set_relation(u, {Elem{1}, Elem{2}});
  CHECK(realize(s, ex(apply_rel(u, {v(0)}))) == b.top());
  CHECK(realize(s, Formula::all(apply_rel(u, {v(0)}))) == b.bot());
  // U(c) or U(g(c, c)) with c = 0 and g constant 0: {0} join {0}.
  auto orf = or_(apply_rel(u, {c}), apply_rel(u, {c}));
  CHECK(realize(s, orf) == Elem{1});
  CHECK(forces(s, Elem{1}, orf));
  CHECK_FALSE(forces(s, Elem{2}, orf));
  CHECK(forces(s, b.bot(), Formula::falsum()));
  CHECK_THROWS_AS(realize(s, apply_rel(u, {v(0)})), Error);
}

TEST_CASE("forcing is monotone and realization respects lifting") {
  Language small("small");
  small.add_function("c", 0);
  small.add_relation("U", 1);
  oracle::SyntaxEnumerator en(small);
  std::mt19937_64 rng(7);
  auto alg = powerset(2);
  auto s = generate_structure(small, alg, 3, rng);
  REQUIRE(validate_structure(s));
  const auto& b = s.algebra();
  for (const auto& f : en.formulas_up_to(5, 1)) {
    for (std::size_t x = 0; x < 3; ++x) {
      auto val = realize_formula(s, f, {x});
      // lift by one at 0 reads the variable one slot further out.
      for (std::size_t y = 0; y < 3; ++y) REQUIRE(realize_formula(s, lift(f, 1, 0), {y, x}) == val);
    }
    if (!bounded_by(f, 0)) continue;
    auto val = realize(s, f);
    for (auto g : b.elements()) {
      if (!forces(s, g, f)) continue;
      for (auto h : b.elements()) {
        if (b.le(h, g)) REQUIRE(forces(s, h, f));
      }
    }
    CHECK(forces(s, val, f));
  }
}

TEST_CASE("generated structures are valid") {
  auto lang = kernel::corpus_language();
  std::mt19937_64 rng(42);
  for (const auto& a : fuzz::registered_algebras()) {
    for (std::size_t m = 1; m <= 3; ++m) {
      auto s = generate_structure(lang, a.algebra, m, rng);
      CHECK(validate_structure(s));
    }
  }
}

TEST_CASE("soundness on the tableaux example") {
  // (p -> q) and (q -> r) entail p -> r.
  const auto& corpus = kernel::standard_proofs();
  auto it = std::find_if(corpus.begin(), corpus.end(),
                         [](const auto& e) { return e.name == "syllogism_hypotheses"; });
  REQUIRE(it != corpus.end());
  std::mt19937_64 rng(3);
  for (const auto& a : fuzz::registered_algebras()) {
    for (int i = 0; i < 5; ++i) {
      auto s = generate_structure(kernel::corpus_language(), a.algebra, 2, rng);
      auto r = validate_soundness(s, it->context, it->goal, it->proof);
      CHECK(r.holds);
      CHECK(s.algebra().le(r.hypotheses, r.conclusion));
    }
  }
}

TEST_CASE("soundness preconditions are reported as errors") {
  const auto& e = kernel::standard_proofs().front();
  BStructure s(kernel::corpus_language(), powerset(1), 2);
  auto wrong_goal = Formula::imp(Formula::falsum(), Formula::falsum());
  try {
    validate_soundness(s, e.context, wrong_goal, e.proof);
    FAIL("expected precondition failure");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::Precondition);
  }
  s.set_equality({Elem{1}, Elem{1}, Elem{0}, Elem{1}});
  CHECK_THROWS_AS(validate_soundness(s, e.context, e.goal, e.proof), Error);
  CHECK_THROWS_AS(BStructure(kernel::corpus_language(), powerset(1), 0), Error);
}

TEST_CASE("structure text round trip") {
  auto lang = unary_lang();
  std::mt19937_64 rng(11);
  auto alg = powerset(2);
  auto s = generate_structure(lang, alg, 3, rng);
  auto text = s.to_text("unary.lang", "builtin:powerset:2");
  auto header = parse_structure_header(text);
  CHECK(header.language_ref == "unary.lang");
  CHECK(header.algebra_ref == "builtin:powerset:2");
  auto back = parse_structure(text, lang, alg);
  CHECK(back.to_text("unary.lang", "builtin:powerset:2") == text);
  auto broken = text.substr(0, text.find("rel U"));
  CHECK_THROWS_AS(parse_structure(broken, lang, alg), Error);
}

}  // TEST_SUITE
