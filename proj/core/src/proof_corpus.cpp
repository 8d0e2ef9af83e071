#include "bvl/proof_corpus.hpp"

namespace bvl::kernel {

const Language& corpus_language() {
  static const Language lang = [] {
    Language l("propositional");
    l.add_relation("p", 0);
    l.add_relation("q", 0);
    l.add_relation("r", 0);
    l.add_relation("U", 1);
    l.add_relation("R", 2);
    l.add_function("c", 0);
    l.add_function("f", 1);
    return l;
  }();
  return lang;
}

namespace {

std::vector<CorpusEntry> build() {
  const auto& l = corpus_language();
  const auto p = Formula::rel(*l.find_relation("p"));
  const auto q = Formula::rel(*l.find_relation("q"));
  const auto r = Formula::rel(*l.find_relation("r"));
  const auto u_sym = *l.find_relation("U");
  const auto r_sym = *l.find_relation("R");
  const auto c = Term::func(*l.find_function("c"));
  const auto f_sym = *l.find_function("f");
  auto U = [&](const Term& t) { return apply_rel(u_sym, {t}); };
  auto R = [&](const Term& a, const Term& b) { return apply_rel(r_sym, {a, b}); };
  auto f = [&](const Term& t) { return apply(f_sym, {t}); };
  auto imp = [](const Formula& a, const Formula& b) { return Formula::imp(a, b); };
  const auto v0 = Term::var(0), v1 = Term::var(1), v2 = Term::var(2);

  std::vector<CorpusEntry> out;

  out.push_back({"identity", {}, imp(p, p), Proof::imp_intro(p, Proof::axm(p))});

  out.push_back({"k_combinator", {}, imp(p, imp(q, p)),
                 Proof::imp_intro(p, Proof::imp_intro(q, Proof::axm(p)))});

  {
    auto a = imp(p, imp(q, r));
    auto b = imp(p, q);
    auto body = Proof::imp_elim(q, Proof::imp_elim(p, Proof::axm(a), Proof::axm(p)),
                                Proof::imp_elim(p, Proof::axm(b), Proof::axm(p)));
    out.push_back({"s_combinator", {}, imp(a, imp(b, imp(p, r))),
                   Proof::imp_intro(a, Proof::imp_intro(b, Proof::imp_intro(p, body)))});
  }

  {
    auto pq = imp(p, q), qr = imp(q, r);
    auto body = Proof::imp_elim(q, Proof::axm(qr), Proof::imp_elim(p, Proof::axm(pq), Proof::axm(p)));
    out.push_back({"syllogism", {}, imp(pq, imp(qr, imp(p, r))),
                   Proof::imp_intro(pq, Proof::imp_intro(qr, Proof::imp_intro(p, body)))});
    out.push_back({"syllogism_hypotheses", Context{pq, qr}, imp(p, r), Proof::imp_intro(p, body)});
  }

  {
    auto nnp = not_(not_(p));
    out.push_back({"double_negation", {}, imp(nnp, p),
                   Proof::imp_intro(nnp, Proof::falsum_elim(p, Proof::imp_elim(not_(p), Proof::axm(nnp),
                                                                               Proof::axm(not_(p)))))});
  }

  {
    auto pq = imp(p, q);
    auto x = imp(pq, p);
    auto contra = Proof::imp_elim(p, Proof::axm(not_(p)), Proof::axm(p));
    auto get_pq = Proof::imp_intro(p, Proof::falsum_elim(q, contra));
    auto get_p = Proof::imp_elim(pq, Proof::axm(x), get_pq);
    out.push_back({"peirce", {}, imp(x, p),
                   Proof::imp_intro(x, Proof::falsum_elim(p, Proof::imp_elim(p, Proof::axm(not_(p)), get_p)))});
  }

  {
    auto all_u = Formula::all(U(v0));
    out.push_back({"instantiate", Context{all_u}, U(c), Proof::all_elim(U(v0), c, Proof::axm(all_u))});
  }

  {
    auto step = Formula::all(imp(U(v0), U(f(v0))));
    auto inst = Proof::all_elim(imp(U(v0), U(f(v0))), c, Proof::axm(step));
    out.push_back({"instantiate_then_apply", Context{step, U(c)}, U(f(c)),
                   Proof::imp_elim(U(c), inst, Proof::axm(U(c)))});
  }

  {
    // Motive v0 = c: at s = c it is c = c, at t = f(c) it is f(c) = c.
    auto hyp = Formula::equal(c, f(c));
    out.push_back({"equality_symmetry", Context{hyp}, Formula::equal(f(c), c),
                   Proof::subst2(c, f(c), Formula::equal(v0, c), Proof::axm(hyp), Proof::ref(c))});
  }

  {
    // forall x y. x = y -> f(x) = f(y); under both binders x is v1, y is v0.
    auto hyp = Formula::equal(v1, v0);
    auto motive = Formula::equal(f(v2), f(v0));
    auto inner = Proof::imp_intro(hyp, Proof::subst2(v1, v0, motive, Proof::axm(hyp), Proof::ref(f(v1))));
    auto goal = Formula::all(Formula::all(imp(hyp, Formula::equal(f(v1), f(v0)))));
    out.push_back({"function_congruence", {}, goal, Proof::all_intro(Proof::all_intro(inner))});
  }

  out.push_back({"reflexivity_closed", {}, Formula::all(Formula::equal(v0, v0)),
                 Proof::all_intro(Proof::ref(v0))});

  {
    auto diag = Formula::all(R(v0, v0));
    out.push_back({"generalise_hypothesis", Context{diag}, Formula::all(R(v0, v0)),
                   Proof::all_intro(Proof::all_elim(R(v0, v0), v0, Proof::axm(diag)))});
  }

  {
    auto none = Formula::all(not_(U(v0)));
    auto clash = Proof::imp_elim(U(c), Proof::all_elim(not_(U(v0)), c, Proof::axm(none)), Proof::axm(U(c)));
    out.push_back({"exists_intro", {}, imp(U(c), ex(U(v0))),
                   Proof::imp_intro(U(c), Proof::imp_intro(none, clash))});
  }

  return out;
}

}  // namespace

const std::vector<CorpusEntry>& standard_proofs() {
  static const std::vector<CorpusEntry> corpus = build();
  return corpus;
}

}  // namespace bvl::kernel
