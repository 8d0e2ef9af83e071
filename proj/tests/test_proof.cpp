#include <doctest.h>

#include "bvl/error.hpp"
#include "bvl/proof.hpp"
#include "bvl/proof_corpus.hpp"
#include "support/oracles.hpp"

using namespace bvl;
using namespace bvl::kernel;

namespace {

const Language& lang() { return corpus_language(); }
Formula rel0(const char* name) { return Formula::rel(*lang().find_relation(name)); }

}  // namespace

TEST_SUITE("proof") {

TEST_CASE("check examples") {
  auto a = rel0("p");
  CHECK(check(Proof::axm(a), Context{a}, a));
  CHECK(check(Proof::imp_intro(a, Proof::axm(a)), {}, Formula::imp(a, a)));
  auto x = Term::var(0);
  CHECK(check(Proof::ref(x), {}, Formula::equal(x, x)));
}

TEST_CASE("failures report the first bad node without throwing") {
  auto p = rel0("p"), q = rel0("q");
  auto r = check(Proof::imp_intro(p, Proof::axm(q)), {}, Formula::imp(p, q));
  CHECK_FALSE(r.ok);
  CHECK(r.path == "impI/0:axm");
  CHECK(r.reason == "goal is not a hypothesis");

  auto bad = Proof::imp_elim(q, Proof::axm(Formula::imp(q, p)), Proof::axm(p));
  r = check(bad, Context{Formula::imp(q, p), p}, p);
  CHECK_FALSE(r.ok);
  CHECK(r.path == "impE/1:axm");

  CHECK_FALSE(check(Proof::axm(p), {}, Formula::rel(*lang().find_relation("U"))).ok);
  CHECK_FALSE(check(Proof::all_intro(Proof::ref(Term::var(0))), {}, p).ok);
}

TEST_CASE("context is a set") {
  auto p = rel0("p"), q = rel0("q");
  CHECK(Context{p, q, p} == Context{q, p});
  CHECK(Context{p}.with(p).size() == 1);
  auto open = Formula::equal(Term::var(0), Term::var(0));
  CHECK(Context{open}.lifted().contains(Formula::equal(Term::var(1), Term::var(1))));
}

TEST_CASE("every corpus derivation checks") {
  const auto& corpus = standard_proofs();
  CHECK(corpus.size() >= 10);
  for (const auto& e : corpus) {
    CAPTURE(e.name);
    auto r = check(e.proof, e.context, e.goal);
    CHECK_MESSAGE(r.ok, r.path << " " << r.reason);
    CHECK(bounded_by(e.goal, 0));
  }
}

TEST_CASE("weakening: corpus proofs survive enlarged contexts") {
  std::vector<Formula> extra{rel0("p"), rel0("r"), Formula::falsum(),
                             Formula::all(Formula::equal(Term::var(0), Term::var(0)))};
  for (const auto& e : standard_proofs()) {
    CAPTURE(e.name);
    auto ctx = e.context;
    for (const auto& x : extra) {
      ctx = ctx.with(x);
      CHECK(check(e.proof, ctx, e.goal));
    }
  }
}

TEST_CASE("proof sexpr round trip") {
  for (const auto& e : standard_proofs()) {
    auto text = to_sexpr(e.proof, lang());
    auto back = parse_proof(text, lang());
    CHECK(to_sexpr(back, lang()) == text);
    CHECK(check(back, e.context, e.goal));
  }
  CHECK(to_sexpr(Proof::imp_intro(rel0("p"), Proof::axm(rel0("p"))), lang()) ==
        "(impI (rel p) (axm (rel p)))");
  CHECK_THROWS_AS(parse_proof("(impI (rel p))", lang()), Error);
  auto ctx = parse_context("(rel p)\n(imp (rel p) (rel q))\n", lang());
  CHECK(ctx.size() == 2);
}

TEST_CASE("bounded search") {
  auto a = rel0("p"), b = rel0("q");
  CHECK(provable_search(Context{a}, a, 1).has_value());
  auto k = Formula::imp(a, Formula::imp(b, a));
  auto found = provable_search({}, k, 3);
  REQUIRE(found.has_value());
  CHECK(check(*found, {}, k));
  CHECK_FALSE(provable_search({}, Formula::falsum(), 12).has_value());
  CHECK_THROWS_AS(provable_search({}, a, 13), Error);
}

TEST_CASE("search results always check") {
  // Propositional goals over p, q, r built from -> and falsum.
  Language props("props");
  props.add_relation("p", 0);
  props.add_relation("q", 0);
  oracle::SyntaxEnumerator en(props);
  std::size_t found = 0;
  for (const auto& g : en.sentences_up_to(7)) {
    auto proof = provable_search({}, g, 5);
    if (!proof) continue;
    ++found;
    REQUIRE(check(*proof, {}, g));
  }
  CHECK(found > 0);
}

}  // TEST_SUITE
