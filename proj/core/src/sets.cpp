#include "bvl/sets.hpp"

#include <algorithm>
#include <cctype>

#include "bvl/error.hpp"
#include "bvl/sexpr.hpp"

namespace bvl::sets {

std::size_t PSet::rank() const {
  std::size_t r = 0;
  for (const auto& c : children_) r = std::max(r, c.rank() + 1);
  return r;
}

bool pset_equiv(const PSet& x, const PSet& y) {
  auto covered = [](const PSet& a, const PSet& b) {
    return std::all_of(a.children().begin(), a.children().end(), [&](const PSet& ac) {
      return std::any_of(b.children().begin(), b.children().end(),
                         [&](const PSet& bc) { return pset_equiv(ac, bc); });
    });
  };
  return covered(x, y) && covered(y, x);
}

bool pset_mem(const PSet& x, const PSet& y) {
  return std::any_of(y.children().begin(), y.children().end(),
                     [&](const PSet& c) { return pset_equiv(x, c); });
}

PSet ordinal_mk(std::size_t n) {
  require_size(n <= 8, "ordinal_mk: n larger than 8");
  std::vector<PSet> below;
  for (std::size_t i = 0; i < n; ++i) below.push_back(PSet(below));
  return PSet(std::move(below));
}

std::string to_sexpr(const PSet& x) {
  std::string out = "(pset";
  for (const auto& c : x.children()) out += " " + to_sexpr(c);
  return out + ")";
}

namespace {

PSet pset_from(const sexpr::Node& n) {
  if (!n.is_form("pset")) sexpr::error_at(n, "expected (pset ...)");
  std::vector<PSet> children;
  for (std::size_t i = 1; i < n.items.size(); ++i) children.push_back(pset_from(n.items[i]));
  return PSet(std::move(children));
}

}  // namespace

PSet parse_pset(std::string_view text) { return pset_from(sexpr::parse_one(text)); }

bool same_algebra(const FinCBA& a, const FinCBA& b) { return &a == &b || a == b; }

BSet::BSet(std::shared_ptr<const FinCBA> algebra) : BSet(std::move(algebra), {}) {}

BSet::BSet(std::shared_ptr<const FinCBA> algebra, std::vector<BEntry> entries) {
  if (!algebra) fail(ErrorCode::Invalid, "bset: missing algebra");
  for (const auto& e : entries) {
    if (!same_algebra(e.child.algebra(), *algebra)) {
      fail(ErrorCode::AlgebraMismatch, "bset: child over a different algebra");
    }
    if (!algebra->contains(e.bval)) fail(ErrorCode::AlgebraMismatch, "bset: value outside algebra");
  }
  node_ = std::make_shared<const Node>(Node{std::move(algebra), std::move(entries)});
}

std::size_t BSet::width() const { return node_->entries.size(); }

std::size_t BSet::rank() const {
  std::size_t r = 0;
  for (const auto& e : node_->entries) r = std::max(r, e.child.rank() + 1);
  return r;
}

bool operator==(const BSet& a, const BSet& b) {
  if (a.identity() == b.identity()) return true;
  if (!same_algebra(a.algebra(), b.algebra()) || a.width() != b.width()) return false;
  for (std::size_t i = 0; i < a.width(); ++i) {
    const auto& x = a.entries()[i];
    const auto& y = b.entries()[i];
    if (x.bval != y.bval || !(x.child == y.child)) return false;
  }
  return true;
}

std::optional<Elem> EqCache::find(const BSet& x, const BSet& y) const {
  auto it = table_.find({x.identity(), y.identity()});
  if (it == table_.end()) return std::nullopt;
  return it->second;
}

void EqCache::store(const BSet& x, const BSet& y, Elem value) {
  table_[{x.identity(), y.identity()}] = value;
}

namespace {

void require_same(const BSet& x, const BSet& y, const char* op) {
  if (!same_algebra(x.algebra(), y.algebra())) {
    fail(ErrorCode::AlgebraMismatch, std::string(op) + ": sets over different algebras");
  }
}

Elem eq_rec(const BSet& x, const BSet& y, EqCache& cache) {
  if (auto hit = cache.find(x, y)) return *hit;
  const auto& alg = x.algebra();
  const auto& xs = x.entries();
  const auto& ys = y.entries();
  std::vector<Elem> mat(xs.size() * ys.size());
  for (std::size_t a = 0; a < xs.size(); ++a) {
    for (std::size_t b = 0; b < ys.size(); ++b) {
      mat[a * ys.size() + b] = eq_rec(xs[a].child, ys[b].child, cache);
    }
  }
  Elem left = alg.top();
  for (std::size_t a = 0; a < xs.size(); ++a) {
    Elem some = alg.bot();
    for (std::size_t b = 0; b < ys.size(); ++b) {
      some = alg.join(some, alg.meet(ys[b].bval, mat[a * ys.size() + b]));
    }
    left = alg.meet(left, alg.imp(xs[a].bval, some));
  }
  Elem right = alg.top();
  for (std::size_t b = 0; b < ys.size(); ++b) {
    Elem some = alg.bot();
    for (std::size_t a = 0; a < xs.size(); ++a) {
      some = alg.join(some, alg.meet(xs[a].bval, mat[a * ys.size() + b]));
    }
    right = alg.meet(right, alg.imp(ys[b].bval, some));
  }
  Elem value = alg.meet(left, right);
  cache.store(x, y, value);
  return value;
}

Elem mem_rec(const BSet& x, const BSet& y, EqCache& cache) {
  const auto& alg = y.algebra();
  Elem acc = alg.bot();
  for (const auto& e : y.entries()) acc = alg.join(acc, alg.meet(e.bval, eq_rec(x, e.child, cache)));
  return acc;
}

Elem subset_rec(const BSet& x, const BSet& y, EqCache& cache) {
  const auto& alg = x.algebra();
  Elem acc = alg.top();
  for (const auto& e : x.entries()) acc = alg.meet(acc, alg.imp(e.bval, mem_rec(e.child, y, cache)));
  return acc;
}

}  // namespace

Elem bv_eq(const BSet& x, const BSet& y, EqCache& cache) {
  require_same(x, y, "bv_eq");
  return eq_rec(x, y, cache);
}

Elem bv_eq(const BSet& x, const BSet& y) {
  EqCache cache;
  return bv_eq(x, y, cache);
}

Elem bv_mem(const BSet& x, const BSet& y, EqCache& cache) {
  require_same(x, y, "bv_mem");
  return mem_rec(x, y, cache);
}

Elem bv_mem(const BSet& x, const BSet& y) {
  EqCache cache;
  return bv_mem(x, y, cache);
}

Elem bv_subset(const BSet& x, const BSet& y, EqCache& cache) {
  require_same(x, y, "bv_subset");
  return subset_rec(x, y, cache);
}

Elem bv_subset(const BSet& x, const BSet& y) {
  EqCache cache;
  return bv_subset(x, y, cache);
}

BSet check(const PSet& x, std::shared_ptr<const FinCBA> algebra) {
  std::vector<BEntry> entries;
  for (const auto& c : x.children()) entries.push_back({check(c, algebra), algebra->top()});
  return BSet(std::move(algebra), std::move(entries));
}

BSet bv_powerset(const BSet& x) {
  const auto& alg = x.algebra();
  require_size(x.width() <= 4, "bv_powerset: more than 4 entries");
  require_size(alg.size() <= 16, "bv_powerset: algebra larger than 16 elements");
  const std::size_t k = x.width();
  const std::size_t n = alg.size();
  std::vector<std::size_t> chi(k, 0);
  std::vector<BEntry> out;
  EqCache cache;
  while (true) {
    std::vector<BEntry> entries;
    for (std::size_t i = 0; i < k; ++i) entries.push_back({x.entries()[i].child, alg.element(chi[i])});
    BSet child(x.algebra_ptr(), std::move(entries));
    Elem value = subset_rec(child, x, cache);
    out.push_back({std::move(child), value});
    // Odometer with the last position varying fastest.
    std::size_t i = k;
    while (i > 0 && ++chi[i - 1] == n) chi[--i] = 0;
    if (i == 0) break;
  }
  return BSet(x.algebra_ptr(), std::move(out));
}

BExtResult b_ext_check(const Predicate& phi, std::span<const BSet> universe) {
  if (universe.empty()) return {};
  const auto& alg = universe.front().algebra();
  std::vector<Elem> values;
  values.reserve(universe.size());
  for (const auto& u : universe) values.push_back(phi(u));
  EqCache cache;
  for (std::size_t i = 0; i < universe.size(); ++i) {
    for (std::size_t j = 0; j < universe.size(); ++j) {
      Elem lhs = alg.meet(bv_eq(universe[i], universe[j], cache), values[i]);
      if (!alg.le(lhs, values[j])) return {false, std::make_pair(i, j)};
    }
  }
  return {};
}

ComprehensionResult comprehension(const BSet& x, const Predicate& phi, Elem gamma,
                                  std::span<const BSet> test_universe) {
  const auto& alg = x.algebra();
  if (!alg.contains(gamma)) fail(ErrorCode::AlgebraMismatch, "comprehension: context outside algebra");
  std::vector<BSet> universe(test_universe.begin(), test_universe.end());
  for (const auto& e : x.entries()) universe.push_back(e.child);
  if (auto r = b_ext_check(phi, universe); !r) {
    fail(ErrorCode::Precondition, "comprehension: predicate is not extensional (universe pair " +
                                      std::to_string(r.witness->first) + "," +
                                      std::to_string(r.witness->second) + ")");
  }
  std::vector<BEntry> entries;
  for (const auto& e : x.entries()) entries.push_back({e.child, alg.meet(e.bval, phi(e.child))});
  ComprehensionResult result{BSet(x.algebra_ptr(), std::move(entries)), alg.top(), {}, false};
  EqCache cache;
  result.subset_value = bv_subset(result.set, x, cache);
  bool ok = alg.le(gamma, result.subset_value);
  for (const auto& z : test_universe) {
    Elem in_y = bv_mem(z, result.set, cache);
    Elem in_x = alg.meet(bv_mem(z, x, cache), phi(z));
    Elem value = alg.biimp(in_y, in_x);
    result.membership_values.push_back(value);
    ok = ok && alg.le(gamma, value);
  }
  result.verified = ok;
  return result;
}

BSet mixture(std::shared_ptr<const FinCBA> algebra, std::span<const std::pair<Elem, BSet>> parts) {
  const auto& alg = *algebra;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (!alg.contains(parts[i].first)) fail(ErrorCode::AlgebraMismatch, "mixture: weight outside algebra");
    if (!same_algebra(parts[i].second.algebra(), alg)) {
      fail(ErrorCode::AlgebraMismatch, "mixture: part over a different algebra");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (alg.meet(parts[i].first, parts[j].first) != alg.bot()) {
        fail(ErrorCode::Precondition, "mixture: weights " + std::to_string(j) + " and " +
                                          std::to_string(i) + " are not disjoint");
      }
    }
  }
  std::vector<BEntry> entries;
  for (const auto& [weight, part] : parts) {
    for (const auto& e : part.entries()) entries.push_back({e.child, alg.meet(weight, e.bval)});
  }
  return BSet(std::move(algebra), std::move(entries));
}

std::string to_sexpr(const BSet& x) {
  std::string out = "(bset " + x.algebra().name();
  for (const auto& e : x.entries()) {
    out += " (" + to_sexpr(e.child) + " " + std::to_string(x.algebra().index(e.bval)) + ")";
  }
  return out + ")";
}

namespace {

BSet bset_from(const sexpr::Node& n, const std::shared_ptr<const FinCBA>& algebra) {
  if (!n.is_form("bset") || n.items.size() < 2 || n.items[1].is_list) {
    sexpr::error_at(n, "expected (bset ALGEBRA ...)");
  }
  if (n.items[1].atom != algebra->name()) {
    fail(ErrorCode::AlgebraMismatch, sexpr::location(n.items[1]) + ": algebra '" + n.items[1].atom +
                                         "' but expected '" + algebra->name() + "'");
  }
  std::vector<BEntry> entries;
  for (std::size_t i = 2; i < n.items.size(); ++i) {
    const auto& item = n.items[i];
    if (!item.is_list || item.items.size() != 2 || item.items[1].is_list) {
      sexpr::error_at(item, "expected (CHILD INDEX)");
    }
    const auto& idx = item.items[1].atom;
    if (idx.empty() || idx.size() > 9 || !std::all_of(idx.begin(), idx.end(), ::isdigit)) {
      sexpr::error_at(item.items[1], "expected an element index");
    }
    auto k = std::stoul(idx);
    if (k >= algebra->size()) sexpr::error_at(item.items[1], "element index out of range");
    entries.push_back({bset_from(item.items[0], algebra), algebra->element(k)});
  }
  return BSet(algebra, std::move(entries));
}

}  // namespace

BSet parse_bset(std::string_view text, std::shared_ptr<const FinCBA> algebra) {
  return bset_from(sexpr::parse_one(text), algebra);
}

}  // namespace bvl::sets
