// Acceptance suite: one PASS/FAIL line per criterion. Every check is exact;
// the oracles live in support/ and share no code with the routines they
// check.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <unordered_map>

#include "bvl/boolalg.hpp"
#include "bvl/error.hpp"
#include "bvl/forcing.hpp"
#include "bvl/fuzz.hpp"
#include "bvl/proof_corpus.hpp"
#include "bvl/semantics.hpp"
#include "bvl/sets.hpp"
#include "bvl/syntax.hpp"
#include "bvl/zfc.hpp"
#include "cli.hpp"
#include "support/oracles.hpp"

using namespace bvl;
using boolalg::Elem;
using boolalg::FinCBA;

namespace {

struct Verdict {
  bool ok = true;
  std::string detail;
};

// Records the first failure; later ones are counted only.
class Tally {
 public:
  void expect(bool cond, const std::string& what) {
    ++checks_;
    if (cond) return;
    ++failures_;
    if (first_.empty()) first_ = what;
  }
  std::size_t checks() const { return checks_; }
  Verdict verdict(const std::string& summary) const {
    if (failures_ == 0) return {true, summary};
    return {false, std::to_string(failures_) + " failures, first: " + first_};
  }

 private:
  std::size_t checks_ = 0;
  std::size_t failures_ = 0;
  std::string first_;
};

std::shared_ptr<const FinCBA> powerset(std::size_t n) {
  return std::make_shared<const FinCBA>(FinCBA::powerset(n));
}

// ---------------------------------------------------------------- 1

Verdict soundness_fuzz() {
  const auto& corpus = kernel::standard_proofs();
  Tally t;
  std::set<std::string> names;
  for (const auto& e : corpus) names.insert(e.name);
  for (auto n : {"syllogism_hypotheses", "k_combinator", "s_combinator"}) {
    t.expect(names.count(n) == 1, std::string("corpus lacks ") + n);
  }
  t.expect(corpus.size() >= 10, "fewer than 10 proofs");
  auto s = fuzz::fuzz_soundness(1, 100);
  t.expect(s.violations == 0, "violation: " + (s.details.empty() ? "" : s.details.front()));
  t.expect(s.structures >= 20, "fewer than 20 structures");
  t.expect(s.checks == s.structures * corpus.size(), "not every proof checked in every structure");
  const auto& algs = fuzz::registered_algebras();
  t.expect(algs.size() == 5, "expected five algebras");
  std::size_t ro = 0;
  for (std::size_t i = 0; i < algs.size(); ++i) {
    t.expect(s.per_algebra[i] >= 4, "algebra " + algs[i].name + " underused");
    if (algs[i].name.rfind("ro-", 0) == 0) ++ro;
  }
  t.expect(ro == 2, "expected two regular open algebras");
  return t.verdict(std::to_string(corpus.size()) + " proofs x " + std::to_string(s.structures) +
                   " structures, " + std::to_string(s.checks) + " inequalities, 0 violations");
}

// ---------------------------------------------------------------- 2

Verdict two_valued_collapse() {
  Language lang("binary");
  auto r = lang.add_relation("R", 2);
  oracle::SyntaxEnumerator en(lang);
  auto sentences = en.sentences_up_to(10);
  auto two = powerset(1);
  Tally t;
  std::size_t structures = 0;
  for (std::size_t m = 1; m <= 3; ++m) {
    std::size_t cells = m * m;
    for (std::uint32_t rel = 0; rel < (1u << cells); ++rel) {
      ++structures;
      semantics::BStructure s(lang, two, m);
      oracle::ClassicalModel cm;
      cm.carrier = m;
      std::vector<Elem> table;
      std::vector<bool> truth;
      for (std::size_t c = 0; c < cells; ++c) {
        bool on = rel >> c & 1;
        table.push_back(on ? two->top() : two->bot());
        truth.push_back(on);
      }
      s.set_relation(r, table);
      cm.relations[r] = truth;
      for (const auto& f : sentences) {
        bool classical = oracle::classical_truth(cm, f);
        auto v = semantics::realize(s, f);
        if ((v == two->top()) != classical || (v != two->top() && v != two->bot())) {
          t.expect(false, "m=" + std::to_string(m) + " R=" + std::to_string(rel) + " " +
                              to_sexpr(f, lang));
        } else {
          t.expect(true, "");
        }
      }
    }
  }
  return t.verdict(std::to_string(sentences.size()) + " sentences x " + std::to_string(structures) +
                   " structures agree");
}

// ---------------------------------------------------------------- 3

Verdict de_bruijn_laws() {
  Language lang("two");
  auto f = lang.add_function("f", 1);
  lang.add_relation("R", 2);
  oracle::SyntaxEnumerator en(lang);
  auto formulas = en.formulas_up_to(7, 3);
  std::vector<Term> subs{Term::var(0), Term::var(1), Term::var(3), apply(f, {Term::var(0)}),
                         apply(f, {apply(f, {Term::var(2)})})};
  Tally t;
  for (const auto& phi : formulas) {
    auto text = [&] { return to_sexpr(phi, lang); };
    for (std::size_t m = 0; m <= 2; ++m) {
      if (lift(phi, 0, m) != phi) t.expect(false, "lift-0 " + text());
      for (std::size_t n1 = 0; n1 <= 2; ++n1) {
        auto once = lift(phi, n1, m);
        if (once.size() != phi.size() || once.arity() != phi.arity()) t.expect(false, "shape " + text());
        for (std::size_t n2 = 0; n2 <= 2; ++n2) {
          if (lift(once, n2, m) != lift(phi, n1 + n2, m)) t.expect(false, "lift-compose " + text());
        }
        if (n1 >= 1 && once != oracle::lift_by_renaming(phi, n1, m)) {
          t.expect(false, "lift vs renaming " + text());
        }
      }
      for (const auto& s : subs) {
        if (subst(lift(phi, 1, m), s, m) != phi) t.expect(false, "subst-lift " + text());
        if (subst(phi, s, m) != oracle::subst_by_renaming(phi, s, m)) {
          t.expect(false, "subst vs capture-avoiding " + text());
        }
      }
    }
    t.expect(true, "");
  }
  return t.verdict(std::to_string(formulas.size()) +
                   " formulas of size <= 7: lift-0, lift-compose, subst-lift, named oracle");
}

// ---------------------------------------------------------------- 4

// Square bit matrix.
class BitMatrix {
 public:
  explicit BitMatrix(std::size_t n) : n_(n), words_((n + 63) / 64), bits_(n * words_, 0) {}
  void set(std::size_t i, std::size_t j) { bits_[i * words_ + j / 64] |= std::uint64_t{1} << (j % 64); }
  bool get(std::size_t i, std::size_t j) const { return bits_[i * words_ + j / 64] >> (j % 64) & 1; }
  bool rows_equal(std::size_t i, std::size_t j) const {
    return std::equal(bits_.begin() + i * words_, bits_.begin() + (i + 1) * words_,
                      bits_.begin() + j * words_);
  }
  std::uint64_t row_hash(std::size_t i) const {
    std::uint64_t h = 1469598103934665603ull;
    for (std::size_t w = 0; w < words_; ++w) h = (h ^ bits_[i * words_ + w]) * 1099511628211ull;
    return h;
  }
  BitMatrix transpose() const {
    BitMatrix out(n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        if (get(i, j)) out.set(j, i);
    return out;
  }
  std::size_t size() const { return n_; }

 private:
  std::size_t n_, words_;
  std::vector<std::uint64_t> bits_;
};

// class_of[i] is the smallest index with the same row. Exact: hashes only
// pick the candidate, rows are then compared in full.
std::vector<std::size_t> row_classes(const BitMatrix& m) {
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> reps;
  std::vector<std::size_t> out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    auto& bucket = reps[m.row_hash(i)];
    auto it = std::find_if(bucket.begin(), bucket.end(), [&](std::size_t r) { return m.rows_equal(r, i); });
    if (it == bucket.end()) {
      bucket.push_back(i);
      out[i] = i;
    } else {
      out[i] = *it;
    }
  }
  return out;
}

Verdict bset_equality_laws() {
  auto alg = powerset(2);
  const auto& b = *alg;
  auto vals = b.elements();
  // Level 1: lists of up to two (empty, value) entries. Level 2: lists of up
  // to two (level-1 set, value) entries. Indices into the previous level are
  // kept so the oracle can recurse on them.
  using Entries = std::vector<std::pair<std::size_t, Elem>>;
  auto lists_over = [&](std::size_t options) {
    std::vector<Entries> out{{}};
    for (std::size_t c = 0; c < options; ++c)
      for (auto v : vals) out.push_back({{c, v}});
    for (std::size_t c1 = 0; c1 < options; ++c1)
      for (auto v1 : vals)
        for (std::size_t c2 = 0; c2 < options; ++c2)
          for (auto v2 : vals) out.push_back({{c1, v1}, {c2, v2}});
    return out;
  };
  auto l1 = lists_over(1);
  auto l2 = lists_over(l1.size());
  const std::size_t n1 = l1.size(), n = l2.size();

  sets::BSet empty(alg);
  std::vector<sets::BSet> s1, s2;
  for (const auto& l : l1) {
    std::vector<sets::BEntry> es;
    for (auto [c, v] : l) es.push_back({empty, v});
    s1.emplace_back(alg, es);
  }
  for (const auto& l : l2) {
    std::vector<sets::BEntry> es;
    for (auto [c, v] : l) es.push_back({s1[c], v});
    s2.emplace_back(alg, es);
  }

  // Oracle: the double meet-of-implications, level by level.
  auto eq_from = [&](const Entries& x, const Entries& y, auto&& lower) {
    Elem left = b.top();
    for (auto [a, va] : x) {
      Elem any = b.bot();
      for (auto [c, vc] : y) any = b.join(any, b.meet(vc, lower(a, c)));
      left = b.meet(left, b.imp(va, any));
    }
    Elem right = b.top();
    for (auto [c, vc] : y) {
      Elem any = b.bot();
      for (auto [a, va] : x) any = b.join(any, b.meet(va, lower(a, c)));
      right = b.meet(right, b.imp(vc, any));
    }
    return b.meet(left, right);
  };
  std::vector<Elem> e1(n1 * n1);
  for (std::size_t i = 0; i < n1; ++i)
    for (std::size_t j = 0; j < n1; ++j)
      e1[i * n1 + j] = eq_from(l1[i], l1[j], [&](std::size_t, std::size_t) { return b.top(); });
  // Where each level-1 set sits among the level-2 sets.
  std::vector<std::size_t> lift1(n1);
  for (std::size_t i = 0; i < n1; ++i) {
    Entries as2;
    for (auto [c, v] : l1[i]) as2.push_back({0, v});  // the empty set is l1[0]
    lift1[i] = static_cast<std::size_t>(std::find(l2.begin(), l2.end(), as2) - l2.begin());
  }

  Tally t;
  std::vector<std::uint8_t> eq(n * n), mem(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    sets::EqCache cache;
    for (std::size_t j = 0; j < n; ++j) {
      auto expected = eq_from(l2[i], l2[j], [&](std::size_t a, std::size_t c) { return e1[a * n1 + c]; });
      auto got = sets::bv_eq(s2[i], s2[j], cache);
      if (got != expected) t.expect(false, "bv_eq differs from oracle at " + std::to_string(i) + "," + std::to_string(j));
      eq[i * n + j] = static_cast<std::uint8_t>(got.bits);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    sets::EqCache cache;
    for (std::size_t j = 0; j < n; ++j) {
      Elem expected = b.bot();
      for (auto [c, v] : l2[j]) expected = b.join(expected, b.meet(v, Elem{eq[i * n + lift1[c]]}));
      auto got = sets::bv_mem(s2[i], s2[j], cache);
      if (got != expected) t.expect(false, "bv_mem differs from oracle at " + std::to_string(i) + "," + std::to_string(j));
      mem[i * n + j] = static_cast<std::uint8_t>(got.bits);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (eq[i * n + i] != b.top().bits) t.expect(false, "reflexivity at " + std::to_string(i));
    for (std::size_t j = 0; j < n; ++j) {
      if (eq[i * n + j] != eq[j * n + i]) t.expect(false, "symmetry at " + std::to_string(i));
    }
  }
  // In a powerset algebra an inequality holds iff it holds at every atom, so
  // transitivity and congruence reduce to statements about 0/1 relations.
  for (std::size_t atom = 0; atom < b.atom_count(); ++atom) {
    BitMatrix e(n), m(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (eq[i * n + j] >> atom & 1) e.set(i, j);
        if (mem[i * n + j] >> atom & 1) m.set(i, j);
      }
    // A reflexive symmetric relation is transitive iff each row is exactly
    // the set of indices sharing that row.
    auto cls = row_classes(e);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (e.get(i, j) != (cls[j] == cls[i])) {
          t.expect(false, "transitivity fails at atom " + std::to_string(atom));
          i = n;
          break;
        }
      }
    // Congruence of membership: equal sets have equal membership rows and
    // equal membership columns.
    auto mt = m.transpose();
    for (std::size_t i = 0; i < n; ++i) {
      if (!m.rows_equal(i, cls[i])) t.expect(false, "membership congruence (left) at " + std::to_string(i));
      if (!mt.rows_equal(i, cls[i])) t.expect(false, "membership congruence (right) at " + std::to_string(i));
    }
  }
  t.expect(true, "");
  return t.verdict(std::to_string(n) + " BSets, " + std::to_string(n * n) +
                   " pairs: eq and mem match the oracle; reflexive, symmetric, transitive, mem congruent");
}

// ---------------------------------------------------------------- 5

Verdict check_absoluteness() {
  auto psets = oracle::enumerate_psets(3, 2);
  std::vector<std::string> canon;
  for (const auto& x : psets) canon.push_back(oracle::canonical(x));
  std::vector<std::shared_ptr<const FinCBA>> algebras{powerset(1)};
  for (const auto& a : fuzz::registered_algebras()) algebras.push_back(a.algebra);
  Tally t;
  for (const auto& alg : algebras) {
    std::vector<sets::BSet> checked;
    for (const auto& x : psets) checked.push_back(sets::check(x, alg));
    sets::EqCache cache;
    for (std::size_t i = 0; i < psets.size(); ++i) {
      for (std::size_t j = 0; j < psets.size(); ++j) {
        bool same = canon[i] == canon[j];
        bool member = false;
        for (const auto& c : psets[j].children()) member = member || oracle::canonical(c) == canon[i];
        auto e = sets::bv_eq(checked[i], checked[j], cache);
        auto m = sets::bv_mem(checked[i], checked[j], cache);
        std::string where = alg->name() + " " + sets::to_sexpr(psets[i]) + " " + sets::to_sexpr(psets[j]);
        t.expect(sets::pset_equiv(psets[i], psets[j]) == same, "pset_equiv " + where);
        t.expect(sets::pset_mem(psets[i], psets[j]) == member, "pset_mem " + where);
        t.expect(e == (same ? alg->top() : alg->bot()), "bv_eq " + where);
        t.expect(m == (member ? alg->top() : alg->bot()), "bv_mem " + where);
      }
    }
  }
  return t.verdict(std::to_string(psets.size()) + " PSets of rank <= 3, width <= 2, over " +
                   std::to_string(algebras.size()) + " algebras: values in {bot, top}, matching");
}

// ---------------------------------------------------------------- 6

using boolalg::PointSet;

PointSet interior_of(const std::vector<PointSet>& opens, PointSet s) {
  PointSet out = 0;
  for (auto u : opens)
    if ((u & ~s) == 0) out |= u;
  return out;
}

Verdict regular_open_algebras() {
  const std::array<std::size_t, 5> counts{1, 1, 4, 29, 355};
  Tally t;
  std::size_t spaces = 0;
  for (std::size_t n = 0; n <= 4; ++n) {
    auto tops = boolalg::enumerate_topologies(n);
    t.expect(tops.size() == counts[n], "topology count on " + std::to_string(n) + " points");
    for (const auto& x : tops) {
      ++spaces;
      const auto& opens = x.opens();
      PointSet full = n == 0 ? 0 : (PointSet{1} << n) - 1;
      auto perp = [&](PointSet u) {
        PointSet closure = full & ~interior_of(opens, full & ~u);
        return full & ~closure;
      };
      std::vector<PointSet> reg;
      for (auto u : opens)
        if (perp(perp(u)) == u) reg.push_back(u);
      std::map<PointSet, std::size_t> pos;
      for (std::size_t i = 0; i < reg.size(); ++i) pos[reg[i]] = i;
      boolalg::AlgebraTables tables;
      tables.size = reg.size();
      tables.meet = [&](std::size_t a, std::size_t b) { return pos.at(reg[a] & reg[b]); };
      tables.join = [&](std::size_t a, std::size_t b) { return pos.at(perp(perp(reg[a] | reg[b]))); };
      tables.neg = [&](std::size_t a) { return pos.at(perp(reg[a])); };
      tables.top = pos.at(full);
      tables.bot = pos.at(0);
      auto violation = boolalg::axiom_violation(tables);
      t.expect(!violation, "axiom battery: " + violation.value_or("") + " on " + x.to_text());

      auto ro = boolalg::regular_open_algebra(x);
      t.expect(ro.size() == reg.size(), "carrier size on " + x.to_text());
      if (ro.size() != reg.size()) continue;
      auto els = ro.elements();
      for (auto a : els) {
        t.expect(pos.count(ro.encoding(a)) == 1, "not regular open");
        t.expect(ro.encoding(ro.neg(a)) == perp(ro.encoding(a)), "negation is not perp");
        for (auto b : els) {
          auto ua = ro.encoding(a), ub = ro.encoding(b);
          t.expect(ro.encoding(ro.meet(a, b)) == (ua & ub), "meet is not intersection");
          t.expect(ro.encoding(ro.join(a, b)) == perp(perp(ua | ub)), "join is not regularized union");
        }
      }
      // Completeness: every subfamily has the regularized union as supremum.
      if (els.size() <= 16) {
        for (std::uint32_t mask = 0; mask < (1u << els.size()); ++mask) {
          std::vector<Elem> fam;
          PointSet uni = 0, inter = full;
          for (std::size_t i = 0; i < els.size(); ++i)
            if (mask >> i & 1) {
              fam.push_back(els[i]);
              uni |= ro.encoding(els[i]);
              inter &= ro.encoding(els[i]);
            }
          if (ro.encoding(ro.sup(fam)) != perp(perp(uni))) t.expect(false, "Sup on " + x.to_text());
          if (ro.encoding(ro.inf(fam)) != perp(perp(inter))) t.expect(false, "Inf on " + x.to_text());
        }
      }
    }
  }
  for (std::size_t n = 0; n <= 4; ++n) {
    auto ro = boolalg::regular_open_algebra(boolalg::FinTopSpace::discrete(n));
    auto ps = FinCBA::powerset(n);
    std::vector<Elem> iso;
    for (auto e : ro.elements()) {
      auto image = ps.find_encoding(ro.encoding(e));
      t.expect(image.has_value(), "discrete element not a subset");
      iso.push_back(image.value_or(Elem{}));
    }
    t.expect(ro.size() == ps.size() && boolalg::is_isomorphism(ro, ps, iso),
             "RO(discrete " + std::to_string(n) + ") is not the powerset");
  }
  return t.verdict(std::to_string(spaces) +
                   " topologies on <= 4 points (1+1+4+29+355): axiom battery, complete, RO(discrete) = powerset");
}

// ---------------------------------------------------------------- 7

Verdict cohen_demo() {
  Tally t;
  for (std::size_t g = 0; g <= 3; ++g) {
    auto ground = forcing::standard_ground(g);
    auto conds = forcing::all_conditions(ground);
    t.expect(conds.size() == static_cast<std::size_t>(std::pow(3, g)), "condition count");
    auto alg = FinCBA::powerset(std::size_t{1} << g);
    auto position = [&](const forcing::Pair& p) {
      return static_cast<std::size_t>(std::find(ground.begin(), ground.end(), p) - ground.begin());
    };
    // The image by direct enumeration of subsets.
    std::vector<Elem> image;
    for (const auto& p : conds) {
      std::uint32_t bits = 0;
      for (std::uint32_t s = 0; s < (1u << g); ++s) {
        bool ok = true;
        for (const auto& x : p.ins()) ok = ok && (s >> position(x) & 1);
        for (const auto& x : p.out()) ok = ok && !(s >> position(x) & 1);
        if (ok) bits |= 1u << s;
      }
      image.push_back(Elem{bits});
      t.expect(forcing::cohen_iota(p, ground).to_elem() == Elem{bits}, "iota differs from enumeration");
      t.expect(bits != 0, "iota is bottom");
    }
    t.expect(boolalg::is_dense_suborder(alg, image), "image not dense for ground " + std::to_string(g));
    t.expect(forcing::cohen_density_check(ground).ok(), "density check fails for ground " + std::to_string(g));
    auto report = forcing::cohen_antichain(conds, ground);
    t.expect(report.matches_clash_rule, "library clash report");
    for (std::size_t i = 0; i < conds.size(); ++i) {
      for (std::size_t j = 0; j < conds.size(); ++j) {
        auto meets = [](const forcing::PairSet& a, const forcing::PairSet& b) {
          for (const auto& x : a)
            if (std::find(b.begin(), b.end(), x) != b.end()) return true;
          return false;
        };
        bool clash = meets(conds[i].ins(), conds[j].out()) || meets(conds[j].ins(), conds[i].out());
        bool bottom = alg.meet(image[i], image[j]) == alg.bot();
        t.expect(bottom == clash, "incompatibility law");
        t.expect(report.incompatible[i][j] == clash, "incompatibility matrix");
      }
    }
    auto totals = forcing::total_specifications(ground);
    t.expect(totals.size() == (std::size_t{1} << g), "total specification count");
    t.expect(forcing::cohen_antichain(totals, ground).pairwise_incompatible, "totals not an antichain");
    auto best = boolalg::max_antichain(alg);
    t.expect(best.exact && best.size == (std::size_t{1} << g), "maximum antichain size");
  }
  return t.verdict("grounds 0..3: iota matches enumeration, dense, nonzero, clash law on all pairs, "
                   "max antichain 2^g");
}

// ---------------------------------------------------------------- 8

bool independent_delta(const forcing::SetFamily& fam, const std::vector<std::size_t>& idx,
                       const forcing::FiniteSet& root) {
  if (idx.size() < 2) return false;
  std::set<std::size_t> distinct(idx.begin(), idx.end());
  if (distinct.size() != idx.size()) return false;
  std::set<std::uint32_t> r(root.begin(), root.end());
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t b = a + 1; b < idx.size(); ++b) {
      std::set<std::uint32_t> sa(fam[idx[a]].begin(), fam[idx[a]].end()), common;
      for (auto x : fam[idx[b]])
        if (sa.count(x)) common.insert(x);
      if (common != r) return false;
    }
  return true;
}

// Distinct nonempty sets of size <= k. The universe is widened when it has
// too few such subsets to supply `count` of them.
forcing::SetFamily random_family(std::mt19937_64& rng, std::size_t count, std::size_t k,
                                 std::uint32_t universe) {
  auto available = [&](std::uint32_t u) {
    std::size_t total = 0, binom = 1;
    for (std::size_t i = 1; i <= k && i <= u; ++i) {
      binom = binom * (u - i + 1) / i;
      total += binom;
    }
    return total;
  };
  while (available(universe) < count) ++universe;
  std::set<std::vector<std::uint32_t>> seen;
  forcing::SetFamily fam;
  std::uniform_int_distribution<std::size_t> size(1, k);
  std::uniform_int_distribution<std::uint32_t> elem(0, universe - 1);
  while (fam.size() < count) {
    std::set<std::uint32_t> s;
    std::size_t want = std::min<std::size_t>(size(rng), universe);
    while (s.size() < want) s.insert(elem(rng));
    std::vector<std::uint32_t> v(s.begin(), s.end());
    if (seen.insert(v).second) fam.push_back(v);
  }
  return fam;
}

Verdict delta_extraction() {
  Tally t;
  std::mt19937_64 rng(20240806);
  for (int trial = 0; trial < 1000; ++trial) {
    std::size_t k = 1 + trial % 3;
    std::size_t bound = forcing::sunflower_bound(k, 3);
    std::size_t count = bound + 1 + rng() % 16;
    auto universe = static_cast<std::uint32_t>(k + rng() % (3 * k + 6));
    auto fam = random_family(rng, count, k, universe);
    auto d = forcing::delta_extract(fam, 3);
    t.expect(d.has_value(), "no Delta-system above the bound, trial " + std::to_string(trial));
    if (!d) continue;
    t.expect(d->indices.size() >= 3, "too few members");
    t.expect(forcing::is_delta_system(fam, d->indices, d->root), "library validator rejects witness");
    t.expect(independent_delta(fam, d->indices, d->root), "independent validator rejects witness");
  }
  std::size_t found = 0, absent = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    std::size_t k = 1 + trial % 3;
    std::size_t count = 3 + rng() % 10;
    auto universe = static_cast<std::uint32_t>(2 + rng() % 6);
    auto fam = random_family(rng, count, k, universe);
    auto d = forcing::delta_extract(fam, 3);
    auto o = oracle::exhaustive_sunflower(fam, 3);
    t.expect(d.has_value() == o.has_value(), "extraction and exhaustive search disagree, trial " +
                                                  std::to_string(trial));
    if (d) {
      ++found;
      t.expect(independent_delta(fam, d->indices, d->root), "witness invalid");
    } else {
      ++absent;
    }
  }
  return t.verdict("1000 families above k!(t-1)^k all extracted and validated; 2000 families of <= 12 "
                   "sets agree with exhaustive search (" +
                   std::to_string(found) + " with, " + std::to_string(absent) + " without)");
}

// ---------------------------------------------------------------- 9

Verdict corpus_integrity() {
  Tally t;
  auto axioms = zfc::zfc_axioms();
  t.expect(axioms.size() == 10, "expected 10 axioms");
  axioms.emplace_back("ch", zfc::ch_sentence());
  for (const auto& [name, f] : axioms) {
    t.expect(bounded_by(f, 0), name + " is not closed");
    auto text = zfc::print(f);
    auto back = zfc::elaborate(zfc::parse(text));
    t.expect(back == f, name + " does not round trip");
    t.expect(zfc::print(back) == text, name + " prints differently after round trip");
    t.expect(to_sexpr(back, zfc::lzfc()) == to_sexpr(f, zfc::lzfc()), name + " sexpr differs");
  }
  auto s = zfc::sanity_structure();
  t.expect(semantics::validate_structure(s).ok, "sanity structure invalid");
  const auto& sym = zfc::symbols();
  for (std::size_t x = 0; x < 2; ++x)
    for (std::size_t y = 0; y < 2; ++y) {
      std::size_t args[] = {x, y};
      bool truly = x == 0 && y == 1;
      t.expect(s.apply_relation(sym.in, args) == (truly ? s.algebra().top() : s.algebra().bot()),
               "membership is not the true one");
    }
  for (auto name : {"emptyset", "extensionality", "regularity"}) {
    t.expect(semantics::realize(s, zfc::axiom(name)) == s.algebra().top(), std::string(name) + " is not top");
  }
  return t.verdict("10 axioms + CH closed and round trip bit-exactly; emptyset, extensionality, "
                   "regularity are top in the sanity model");
}

// ---------------------------------------------------------------- 10

std::string capture_command(const std::string& cmd, int& status) {
  std::string out;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) {
    status = -1;
    return out;
  }
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), got);
  status = pclose(p);
  return out;
}

Verdict determinism() {
  Tally t;
  std::vector<std::string> args{"fuzz-soundness", "--seed", "1", "--trials", "100"};
  std::ostringstream a, b, e1, e2;
  int c1 = cli::run(args, a, e1);
  int c2 = cli::run(args, b, e2);
  t.expect(c1 == 0 && c2 == 0, "nonzero exit");
  t.expect(a.str() == b.str(), "in-process outputs differ");
  t.expect(a.str().find("violations=0") != std::string::npos, "violations reported");
#ifdef BVL_CLI_PATH
  int s1 = 0, s2 = 0;
  std::string cmd = std::string(BVL_CLI_PATH) + " fuzz-soundness --seed 1 --trials 100";
  auto p1 = capture_command(cmd, s1);
  auto p2 = capture_command(cmd, s2);
  t.expect(s1 == 0 && s2 == 0, "binary exited nonzero");
  t.expect(p1 == p2, "binary outputs differ");
  t.expect(p1 == a.str(), "binary and in-process outputs differ");
#endif
  return t.verdict("two in-process runs and two runs of the binary are byte-identical (" +
                   std::to_string(a.str().size()) + " bytes)");
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_seconds;
    std::function<Verdict()> run;
  };
  std::vector<Criterion> criteria{
      {1, "soundness over corpus proofs and generated structures", 10, soundness_fuzz},
      {2, "two-valued collapse against a classical evaluator", 60, two_valued_collapse},
      {3, "de Bruijn lift/subst laws and named-variable oracle", 0, de_bruijn_laws},
      {4, "bv_eq graded equivalence and membership congruence", 120, bset_equality_laws},
      {5, "check absoluteness for eq and mem", 0, check_absoluteness},
      {6, "regular open algebras of all small topologies", 120, regular_open_algebras},
      {7, "Cohen embedding: density, incompatibility, antichains", 0, cohen_demo},
      {8, "Delta-system extraction", 0, delta_extraction},
      {9, "set-theory corpus integrity", 0, corpus_integrity},
      {10, "fuzz-soundness determinism", 0, determinism},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (v.ok && c.limit_seconds > 0 && secs > c.limit_seconds) {
      v = {false, "took " + std::to_string(secs) + " s, limit " + std::to_string(c.limit_seconds) + " s"};
    }
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2fs", secs);
    std::cout << (v.ok ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.name << " -- " << v.detail
              << " [" << timing << "]" << std::endl;
    if (!v.ok) ++failed;
  }
  std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criteria fail") << std::endl;
  return failed == 0 ? 0 : 1;
}
