#include <doctest.h>

#include "bvl/error.hpp"
#include "bvl/syntax.hpp"
#include "support/oracles.hpp"

using namespace bvl;

namespace {

Language two_symbols() {
  Language l("two");
  l.add_function("f", 1);
  l.add_relation("R", 2);
  return l;
}

Term v(std::size_t i) { return Term::var(i); }
Formula eq(const Term& a, const Term& b) { return Formula::equal(a, b); }

}  // namespace

TEST_SUITE("syntax") {

TEST_CASE("lift examples") {
  CHECK(lift(v(0), 1, 0) == v(1));
  CHECK(lift(v(0), 1, 1) == v(0));
  auto f = Formula::all(eq(v(0), v(1)));
  CHECK(lift(f, 2, 0) == Formula::all(eq(v(0), v(3))));
  CHECK(oracle::lift_by_renaming(f, 2, 0) == Formula::all(eq(v(0), v(3))));
}

TEST_CASE("subst examples") {
  auto lang = two_symbols();
  auto fs = *lang.find_function("f");
  auto s = apply(fs, {v(0)});
  CHECK(subst(v(0), s, 0) == s);
  CHECK(subst(v(3), s, 1) == v(2));
  auto f = Formula::all(eq(v(0), v(1)));
  CHECK(subst(f, s, 0) == Formula::all(eq(v(0), lift(s, 1, 0))));
  CHECK(oracle::subst_by_renaming(f, s, 0) == Formula::all(eq(v(0), lift(s, 1, 0))));
}

TEST_CASE("bounded_by examples") {
  CHECK_FALSE(bounded_by(v(0), 0));
  CHECK(bounded_by(Formula::all(eq(v(0), v(0))), 0));
  auto f = Formula::imp(eq(v(2), v(2)), Formula::falsum());
  CHECK(bounded_by(f, 3));
  CHECK_FALSE(bounded_by(f, 2));
  CHECK(f.free_bound() == 3);
}

TEST_CASE("derived connectives use the classical encodings") {
  auto bot = Formula::falsum();
  CHECK(not_(bot) == Formula::imp(bot, bot));
  auto e = eq(v(0), v(0));
  CHECK(ex(e) == not_(Formula::all(not_(e))));
  // Unfolded by hand: not(or(not F, not F)) with or(a, b) = (a -> F) -> b.
  CHECK(to_sexpr(and_(bot, bot), Language{}) ==
        "(imp (imp (imp (imp falsum falsum) falsum) (imp falsum falsum)) falsum)");
  CHECK(or_(e, bot) == Formula::imp(not_(e), bot));
  CHECK(iff(e, bot) == and_(Formula::imp(e, bot), Formula::imp(bot, e)));
}

TEST_CASE("arity is computed and ill-formed applications are rejected") {
  auto lang = two_symbols();
  auto fs = *lang.find_function("f");
  auto rs = *lang.find_relation("R");
  CHECK(Term::func(fs).arity() == 1);
  CHECK(Formula::rel(rs).arity() == 2);
  CHECK(Formula::apprel(Formula::rel(rs), v(0)).arity() == 1);
  CHECK(apply_rel(rs, {v(0), v(1)}).arity() == 0);
  CHECK_THROWS_AS(Term::app(v(0), v(1)), Error);
  CHECK_THROWS_AS(Term::app(Term::func(fs), Term::func(fs)), Error);
  CHECK_THROWS_AS(Formula::equal(Term::func(fs), v(0)), Error);
  CHECK_THROWS_AS(Formula::imp(Formula::rel(rs), Formula::falsum()), Error);
  CHECK_THROWS_AS(Formula::all(Formula::rel(rs)), Error);
}

TEST_CASE("application order: first argument innermost") {
  auto lang = two_symbols();
  auto rs = *lang.find_relation("R");
  auto f = apply_rel(rs, {v(0), v(1)});
  CHECK(to_sexpr(f, lang) == "(apprel (apprel (rel R) (var 0)) (var 1))");
}

TEST_CASE("sexpr round trip and diagnostics") {
  auto lang = two_symbols();
  oracle::SyntaxEnumerator en(lang);
  for (const auto& f : en.formulas_up_to(6, 2)) {
    auto text = to_sexpr(f, lang);
    REQUIRE(parse_formula(text, lang) == f);
  }
  CHECK(parse_formula("  (all\n (eq (var 0)   (var 0)))", lang) == Formula::all(eq(v(0), v(0))));
  try {
    parse_formula("(imp falsum\n  (rel Q))", lang);
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Parse);
    CHECK(std::string(e.what()).find("2:") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_formula("(imp falsum)", lang), Error);
  CHECK_THROWS_AS(parse_term("(var -1)", lang), Error);
}

TEST_CASE("language text round trip") {
  auto lang = two_symbols();
  auto back = Language::from_text(lang.to_text(), "two");
  CHECK(back == lang);
  CHECK_THROWS_AS(Language::from_text("func f 1\nrel f 2\n"), Error);
}

TEST_CASE("lift and subst laws on small formulas") {
  auto lang = two_symbols();
  oracle::SyntaxEnumerator en(lang);
  auto fs = *lang.find_function("f");
  std::vector<Term> witnesses{v(0), v(2), apply(fs, {v(1)})};
  for (const auto& f : en.formulas_up_to(5, 2)) {
    for (std::size_t m = 0; m <= 2; ++m) {
      REQUIRE(lift(f, 0, m) == f);
      REQUIRE(lift(lift(f, 1, m), 2, m) == lift(f, 3, m));
      REQUIRE(lift(f, 1, m).size() == f.size());
      for (const auto& s : witnesses) REQUIRE(subst(lift(f, 1, m), s, m) == f);
    }
    for (std::size_t l = f.free_bound(); l < f.free_bound() + 2; ++l) REQUIRE(bounded_by(f, l));
  }
}

TEST_CASE("capture-avoiding oracle agrees where renaming is forced") {
  // forall x0. R(x0, x1) with x1 := f(x0): the binder must be renamed.
  auto lang = two_symbols();
  auto rs = *lang.find_relation("R");
  auto fs = *lang.find_function("f");
  auto f = Formula::all(apply_rel(rs, {v(0), v(1)}));
  auto s = apply(fs, {v(0)});
  auto expected = Formula::all(apply_rel(rs, {v(0), apply(fs, {v(1)})}));
  CHECK(subst(f, s, 0) == expected);
  CHECK(oracle::subst_by_renaming(f, s, 0) == expected);
}

TEST_CASE("closed formulas up to size 8 agree with the named oracle") {
  auto lang = two_symbols();
  oracle::SyntaxEnumerator en(lang);
  auto fs = *lang.find_function("f");
  std::vector<Term> witnesses{v(0), v(1), apply(fs, {v(2)})};
  for (const auto& f : en.sentences_up_to(8)) {
    for (std::size_t n = 0; n <= 2; ++n) {
      REQUIRE(lift(f, 1, n) == oracle::lift_by_renaming(f, 1, n));
      for (const auto& s : witnesses) REQUIRE(subst(f, s, n) == oracle::subst_by_renaming(f, s, n));
    }
  }
}

}  // TEST_SUITE
