#include "bvl/semantics.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <unordered_map>

#include "bvl/error.hpp"
#include "text_util.hpp"

namespace bvl::semantics {

namespace {

constexpr std::size_t kMaxTableSize = std::size_t{1} << 20;

std::size_t index_of(const std::vector<SymbolRef>& symbols, SymbolRef s, const char* what) {
  auto it = std::lower_bound(symbols.begin(), symbols.end(), s);
  if (it == symbols.end() || *it != s) {
    fail(ErrorCode::Invalid, std::string("unknown ") + what + " symbol");
  }
  return static_cast<std::size_t>(it - symbols.begin());
}

std::string tuple_text(std::span<const std::size_t> xs) {
  std::string out = "(";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(xs[i]);
  }
  return out + ")";
}

// Advances a little-endian odometer over carrier^n; false after the last tuple.
bool next_tuple(std::vector<std::size_t>& xs, std::size_t m) {
  for (std::size_t i = xs.size(); i-- > 0;) {
    if (++xs[i] < m) return true;
    xs[i] = 0;
  }
  return false;
}

}  // namespace

BStructure::BStructure(Language language, std::shared_ptr<const FinCBA> algebra,
                       std::size_t carrier_size)
    : language_(std::move(language)), algebra_(std::move(algebra)), carrier_size_(carrier_size) {
  if (!algebra_) fail(ErrorCode::Invalid, "structure: missing algebra");
  if (carrier_size_ == 0) fail(ErrorCode::Invalid, "structure: carrier must be non-empty");
  function_symbols_ = language_.function_symbols();
  relation_symbols_ = language_.relation_symbols();
  std::sort(function_symbols_.begin(), function_symbols_.end());
  std::sort(relation_symbols_.begin(), relation_symbols_.end());
  for (auto s : function_symbols_) functions_.emplace_back(table_size(s.arity), 0);
  for (auto s : relation_symbols_) relations_.emplace_back(table_size(s.arity), algebra_->bot());
  eq_.assign(carrier_size_ * carrier_size_, algebra_->bot());
  for (std::size_t x = 0; x < carrier_size_; ++x) eq_[x * carrier_size_ + x] = algebra_->top();
}

std::size_t BStructure::table_size(std::size_t arity) const {
  std::size_t n = 1;
  for (std::size_t i = 0; i < arity; ++i) {
    require_size(n <= kMaxTableSize / carrier_size_, "structure: interpretation table too large");
    n *= carrier_size_;
  }
  return n;
}

std::size_t BStructure::offset(std::size_t arity, std::span<const std::size_t> args) const {
  if (args.size() != arity) {
    fail(ErrorCode::Precondition, "structure: expected " + std::to_string(arity) +
                                      " arguments, got " + std::to_string(args.size()));
  }
  std::size_t off = 0;
  for (auto a : args) {
    if (a >= carrier_size_) fail(ErrorCode::Precondition, "structure: argument outside carrier");
    off = off * carrier_size_ + a;
  }
  return off;
}

void BStructure::set_function(SymbolRef symbol, std::vector<std::size_t> table) {
  auto i = index_of(function_symbols_, symbol, "function");
  if (table.size() != functions_[i].size()) fail(ErrorCode::Invalid, "function table has wrong size");
  for (auto x : table) {
    if (x >= carrier_size_) fail(ErrorCode::Invalid, "function value outside carrier");
  }
  functions_[i] = std::move(table);
}

void BStructure::set_relation(SymbolRef symbol, std::vector<Elem> table) {
  auto i = index_of(relation_symbols_, symbol, "relation");
  if (table.size() != relations_[i].size()) fail(ErrorCode::Invalid, "relation table has wrong size");
  for (auto x : table) {
    if (!algebra_->contains(x)) fail(ErrorCode::AlgebraMismatch, "relation value outside algebra");
  }
  relations_[i] = std::move(table);
}

void BStructure::set_equality(std::vector<Elem> table) {
  if (table.size() != eq_.size()) fail(ErrorCode::Invalid, "equality table has wrong size");
  for (auto x : table) {
    if (!algebra_->contains(x)) fail(ErrorCode::AlgebraMismatch, "equality value outside algebra");
  }
  eq_ = std::move(table);
}

std::size_t BStructure::apply_function(SymbolRef symbol, std::span<const std::size_t> args) const {
  return functions_[index_of(function_symbols_, symbol, "function")][offset(symbol.arity, args)];
}

Elem BStructure::apply_relation(SymbolRef symbol, std::span<const std::size_t> args) const {
  return relations_[index_of(relation_symbols_, symbol, "relation")][offset(symbol.arity, args)];
}

const std::vector<std::size_t>& BStructure::function_table(SymbolRef symbol) const {
  return functions_[index_of(function_symbols_, symbol, "function")];
}

const std::vector<Elem>& BStructure::relation_table(SymbolRef symbol) const {
  return relations_[index_of(relation_symbols_, symbol, "relation")];
}

std::string BStructure::to_text(const std::string& language_ref,
                                 const std::string& algebra_ref) const {
  std::ostringstream out;
  out << "language " << language_ref << "\n";
  out << "algebra " << algebra_ref << "\n";
  out << "carrier " << carrier_size_ << "\n";
  auto rows = [&](auto&& cell, std::size_t size) {
    std::size_t width = size == 1 ? 1 : carrier_size_;
    for (std::size_t i = 0; i < size; ++i) {
      out << cell(i) << (i % width == width - 1 ? "\n" : " ");
    }
  };
  out << "eq\n";
  rows([&](std::size_t i) { return algebra_->index(eq_[i]); }, eq_.size());
  for (std::size_t k = 0; k < function_symbols_.size(); ++k) {
    out << "func " << language_.function_name(function_symbols_[k]) << "\n";
    rows([&](std::size_t i) { return functions_[k][i]; }, functions_[k].size());
  }
  for (std::size_t k = 0; k < relation_symbols_.size(); ++k) {
    out << "rel " << language_.relation_name(relation_symbols_[k]) << "\n";
    rows([&](std::size_t i) { return algebra_->index(relations_[k][i]); }, relations_[k].size());
  }
  return out.str();
}

StructureHeader parse_structure_header(std::string_view text) {
  StructureHeader header;
  bool have_language = false, have_algebra = false;
  std::size_t line_no = 0;
  for (const auto& line : text_util::lines(text)) {
    ++line_no;
    auto w = text_util::words(text_util::strip_comment(line));
    if (w.empty()) continue;
    if (w[0] == "language" && w.size() == 2) {
      header.language_ref = w[1];
      have_language = true;
    } else if (w[0] == "algebra" && w.size() == 2) {
      header.algebra_ref = w[1];
      have_algebra = true;
    } else {
      break;
    }
  }
  if (!have_language || !have_algebra) {
    fail(ErrorCode::Parse, "1:1: structure file must start with 'language REF' and 'algebra REF'");
  }
  return header;
}

BStructure parse_structure(std::string_view text, Language language,
                           std::shared_ptr<const FinCBA> algebra) {
  struct Line {
    std::size_t no;
    std::vector<std::string> words;
  };
  std::vector<Line> body;
  std::size_t line_no = 0;
  for (const auto& line : text_util::lines(text)) {
    ++line_no;
    auto w = text_util::words(text_util::strip_comment(line));
    if (w.empty()) continue;
    if ((w[0] == "language" || w[0] == "algebra") && w.size() == 2) continue;
    body.push_back({line_no, std::move(w)});
  }
  auto perr = [](std::size_t no, const std::string& msg) -> void {
    fail(ErrorCode::Parse, std::to_string(no) + ":1: " + msg);
  };
  if (body.empty() || body[0].words.size() != 2 || body[0].words[0] != "carrier") {
    perr(body.empty() ? line_no : body[0].no, "expected 'carrier N'");
  }
  std::size_t m = text_util::to_index(body[0].words[1], body[0].no);
  require_size(m <= 1024, "structure: carrier larger than 1024");
  BStructure s(language, algebra, m);
  const auto& alg = *algebra;

  std::size_t pos = 1;
  // Reads `count` entries laid out `width` per row.
  auto read_cells = [&](std::size_t count, std::size_t width, std::size_t limit,
                        std::size_t header_no) {
    std::vector<std::size_t> cells;
    std::size_t rows = count / width;
    for (std::size_t r = 0; r < rows; ++r) {
      if (pos >= body.size()) perr(header_no, "table truncated");
      const auto& ln = body[pos++];
      if (ln.words.size() != width) {
        perr(ln.no, "expected " + std::to_string(width) + " entries, got " +
                        std::to_string(ln.words.size()));
      }
      for (const auto& word : ln.words) {
        auto v = text_util::to_index(word, ln.no);
        if (v >= limit) perr(ln.no, "entry " + word + " out of range");
        cells.push_back(v);
      }
    }
    return cells;
  };
  auto to_elems = [&](const std::vector<std::size_t>& cells) {
    std::vector<Elem> out;
    out.reserve(cells.size());
    for (auto c : cells) out.push_back(alg.element(c));
    return out;
  };

  bool have_eq = false;
  std::vector<SymbolRef> seen_f, seen_r;
  while (pos < body.size()) {
    const auto& hd = body[pos++];
    const auto& w = hd.words;
    if (w.size() == 1 && w[0] == "eq") {
      if (have_eq) perr(hd.no, "duplicate eq table");
      s.set_equality(to_elems(read_cells(m * m, m, alg.size(), hd.no)));
      have_eq = true;
    } else if (w.size() == 2 && w[0] == "func") {
      auto sym = language.find_function(w[1]);
      if (!sym) perr(hd.no, "unknown function '" + w[1] + "'");
      if (std::find(seen_f.begin(), seen_f.end(), *sym) != seen_f.end()) perr(hd.no, "duplicate table");
      seen_f.push_back(*sym);
      std::size_t size = s.function_table(*sym).size();
      s.set_function(*sym, read_cells(size, sym->arity == 0 ? 1 : m, m, hd.no));
    } else if (w.size() == 2 && w[0] == "rel") {
      auto sym = language.find_relation(w[1]);
      if (!sym) perr(hd.no, "unknown relation '" + w[1] + "'");
      if (std::find(seen_r.begin(), seen_r.end(), *sym) != seen_r.end()) perr(hd.no, "duplicate table");
      seen_r.push_back(*sym);
      std::size_t size = s.relation_table(*sym).size();
      s.set_relation(*sym, to_elems(read_cells(size, sym->arity == 0 ? 1 : m, alg.size(), hd.no)));
    } else {
      perr(hd.no, "expected 'eq', 'func NAME' or 'rel NAME'");
    }
  }
  if (!have_eq) perr(line_no, "missing eq table");
  for (auto f : language.function_symbols()) {
    if (std::find(seen_f.begin(), seen_f.end(), f) == seen_f.end()) {
      perr(line_no, "missing table for function '" + language.function_name(f) + "'");
    }
  }
  for (auto r : language.relation_symbols()) {
    if (std::find(seen_r.begin(), seen_r.end(), r) == seen_r.end()) {
      perr(line_no, "missing table for relation '" + language.relation_name(r) + "'");
    }
  }
  return s;
}

Diagnostic validate_structure(const BStructure& s) {
  const auto& alg = s.algebra();
  const std::size_t m = s.carrier_size();
  require_size(m <= 32, "validate_structure: carrier larger than 32");
  require_size(alg.size() <= 256, "validate_structure: algebra larger than 2^8");
  auto bad = [&](std::string msg) { return Diagnostic{false, std::move(msg)}; };
  auto lbl = [&](Elem e) { return alg.label(e); };

  for (std::size_t x = 0; x < m; ++x) {
    if (s.equality(x, x) != alg.top()) {
      return bad("reflexivity: eq(" + std::to_string(x) + "," + std::to_string(x) + ") = " +
                 lbl(s.equality(x, x)));
    }
  }
  for (std::size_t x = 0; x < m; ++x) {
    for (std::size_t y = 0; y < m; ++y) {
      if (s.equality(x, y) != s.equality(y, x)) {
        return bad("symmetry: eq(" + std::to_string(x) + "," + std::to_string(y) + ") = " +
                   lbl(s.equality(x, y)) + " but eq(" + std::to_string(y) + "," +
                   std::to_string(x) + ") = " + lbl(s.equality(y, x)));
      }
    }
  }
  for (std::size_t x = 0; x < m; ++x) {
    for (std::size_t y = 0; y < m; ++y) {
      for (std::size_t z = 0; z < m; ++z) {
        if (!alg.le(alg.meet(s.equality(x, y), s.equality(y, z)), s.equality(x, z))) {
          return bad("transitivity: eq(" + std::to_string(x) + "," + std::to_string(y) +
                     ") & eq(" + std::to_string(y) + "," + std::to_string(z) + ") not <= eq(" +
                     std::to_string(x) + "," + std::to_string(z) + ")");
        }
      }
    }
  }
  // With the equivalence laws in place, congruence in each argument separately
  // implies congruence in all arguments at once (chain the single changes).
  const auto& lang = s.language();
  for (auto f : lang.function_symbols()) {
    if (f.arity == 0) continue;
    std::vector<std::size_t> xs(f.arity, 0);
    do {
      auto fx = s.apply_function(f, xs);
      for (std::size_t i = 0; i < f.arity; ++i) {
        auto ys = xs;
        for (std::size_t y = 0; y < m; ++y) {
          ys[i] = y;
          auto fy = s.apply_function(f, ys);
          if (!alg.le(s.equality(xs[i], y), s.equality(fx, fy))) {
            return bad("function congruence: " + lang.function_name(f) + tuple_text(xs) + " vs " +
                       lang.function_name(f) + tuple_text(ys));
          }
        }
      }
    } while (next_tuple(xs, m));
  }
  for (auto r : lang.relation_symbols()) {
    if (r.arity == 0) continue;
    std::vector<std::size_t> xs(r.arity, 0);
    do {
      auto rx = s.apply_relation(r, xs);
      for (std::size_t i = 0; i < r.arity; ++i) {
        auto ys = xs;
        for (std::size_t y = 0; y < m; ++y) {
          ys[i] = y;
          if (!alg.le(alg.meet(s.equality(xs[i], y), rx), s.apply_relation(r, ys))) {
            return bad("relation congruence: " + lang.relation_name(r) + tuple_text(xs) + " vs " +
                       lang.relation_name(r) + tuple_text(ys));
          }
        }
      }
    } while (next_tuple(xs, m));
  }
  return {};
}

namespace {

struct MemoKey {
  const void* node;
  std::vector<std::size_t> env;
  bool operator==(const MemoKey&) const = default;
};

struct MemoHash {
  std::size_t operator()(const MemoKey& k) const noexcept {
    std::size_t h = std::hash<const void*>{}(k.node);
    for (auto x : k.env) h = h * 1000003u ^ (x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2));
    return h;
  }
};

class Evaluator {
 public:
  explicit Evaluator(const BStructure& s) : s_(s), alg_(s.algebra()) {}

  std::size_t term(const Term& t, const Assignment& v, std::vector<std::size_t>& args) const {
    switch (t.kind()) {
      case Term::Kind::Var:
        return v[t.var_index()];
      case Term::Kind::Func:
        return s_.apply_function(t.symbol(), args);
      case Term::Kind::App: {
        std::vector<std::size_t> none;
        args.insert(args.begin(), term(t.arg(), v, none));
        return term(t.head(), v, args);
      }
    }
    return 0;
  }

  std::size_t closed_term(const Term& t, const Assignment& v) const {
    std::vector<std::size_t> args;
    return term(t, v, args);
  }

  Elem formula(const Formula& f, const Assignment& v, std::vector<std::size_t>& args) {
    switch (f.kind()) {
      case Formula::Kind::Falsum:
        return alg_.bot();
      case Formula::Kind::Equal:
        return s_.equality(closed_term(f.left_term(), v), closed_term(f.right_term(), v));
      case Formula::Kind::Rel:
        return s_.apply_relation(f.symbol(), args);
      case Formula::Kind::AppRel:
        args.insert(args.begin(), closed_term(f.arg(), v));
        return formula(f.head(), v, args);
      case Formula::Kind::Imp: {
        std::vector<std::size_t> none;
        auto a = formula(f.lhs(), v, none);
        none.clear();
        return alg_.imp(a, formula(f.rhs(), v, none));
      }
      case Formula::Kind::All:
        return quantifier(f, v);
    }
    return alg_.bot();
  }

 private:
  Elem quantifier(const Formula& f, const Assignment& v) {
    std::size_t relevant = std::min(f.free_bound(), v.size());
    MemoKey key{f.identity(), Assignment(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(relevant))};
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    Elem acc = alg_.top();
    Assignment w;
    w.reserve(relevant + 1);
    w.push_back(0);
    w.insert(w.end(), key.env.begin(), key.env.end());
    const Formula body = f.body();
    for (std::size_t x = 0; x < s_.carrier_size() && acc != alg_.bot(); ++x) {
      w[0] = x;
      std::vector<std::size_t> none;
      acc = alg_.meet(acc, formula(body, w, none));
    }
    memo_.emplace(std::move(key), acc);
    return acc;
  }

  const BStructure& s_;
  const FinCBA& alg_;
  std::unordered_map<MemoKey, Elem, MemoHash> memo_;
};

void check_assignment(const BStructure& s, std::size_t bound, const Assignment& v,
                      std::size_t arity, std::size_t given) {
  if (bound > v.size()) {
    fail(ErrorCode::Precondition, "realize: expression has free variable " +
                                      std::to_string(bound - 1) + " but the assignment has length " +
                                      std::to_string(v.size()));
  }
  for (auto x : v) {
    if (x >= s.carrier_size()) fail(ErrorCode::Precondition, "realize: assignment outside carrier");
  }
  if (arity != given) {
    fail(ErrorCode::Precondition, "realize: arity " + std::to_string(arity) + " but " +
                                      std::to_string(given) + " arguments");
  }
}

}  // namespace

std::size_t realize_term(const BStructure& s, const Term& t, const Assignment& v,
                         std::span<const std::size_t> args) {
  check_assignment(s, t.free_bound(), v, t.arity(), args.size());
  std::vector<std::size_t> a(args.begin(), args.end());
  for (auto x : a) {
    if (x >= s.carrier_size()) fail(ErrorCode::Precondition, "realize: argument outside carrier");
  }
  return Evaluator(s).term(t, v, a);
}

Elem realize_formula(const BStructure& s, const Formula& f, const Assignment& v,
                     std::span<const std::size_t> args) {
  check_assignment(s, f.free_bound(), v, f.arity(), args.size());
  std::vector<std::size_t> a(args.begin(), args.end());
  for (auto x : a) {
    if (x >= s.carrier_size()) fail(ErrorCode::Precondition, "realize: argument outside carrier");
  }
  Evaluator ev(s);
  return ev.formula(f, v, a);
}

Elem realize(const BStructure& s, const Formula& sentence) {
  return realize_formula(s, sentence, {});
}

bool forces(const BStructure& s, Elem gamma, const Formula& sentence) {
  if (!bounded_by(sentence, 0)) fail(ErrorCode::Precondition, "forces: formula is not a sentence");
  if (!s.algebra().contains(gamma)) fail(ErrorCode::AlgebraMismatch, "forces: context outside algebra");
  return s.algebra().le(gamma, realize(s, sentence));
}

SoundnessReport validate_soundness(const BStructure& s, const kernel::Context& ctx,
                                   const Formula& goal, const kernel::Proof& proof) {
  if (auto r = kernel::check(proof, ctx, goal); !r) {
    fail(ErrorCode::Precondition, "soundness: proof does not check at " + r.path + ": " + r.reason);
  }
  if (!bounded_by(goal, 0)) fail(ErrorCode::Precondition, "soundness: goal is not a sentence");
  for (const auto& g : ctx) {
    if (!bounded_by(g, 0)) fail(ErrorCode::Precondition, "soundness: hypothesis is not a sentence");
  }
  if (auto d = validate_structure(s); !d) {
    fail(ErrorCode::Precondition, "soundness: invalid structure: " + d.failure);
  }
  const auto& alg = s.algebra();
  SoundnessReport report;
  report.hypotheses = alg.top();
  for (const auto& g : ctx) report.hypotheses = alg.meet(report.hypotheses, realize(s, g));
  report.conclusion = realize(s, goal);
  report.holds = alg.le(report.hypotheses, report.conclusion);
  return report;
}

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[std::max(a, b)] = std::min(a, b);
    return true;
  }
};

}  // namespace

BStructure generate_structure(const Language& language, std::shared_ptr<const FinCBA> algebra,
                              std::size_t carrier_size, std::mt19937_64& rng) {
  BStructure s(language, algebra, carrier_size);
  const auto& alg = *algebra;
  const std::size_t m = carrier_size;
  auto pick = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };

  for (auto f : language.function_symbols()) {
    std::vector<std::size_t> table(s.function_table(f).size());
    for (auto& x : table) x = pick(m);
    s.set_function(f, std::move(table));
  }

  const auto atoms = alg.atoms();
  std::vector<Elem> eq(m * m, alg.bot());
  std::map<SymbolRef, std::vector<Elem>> rel_tables;
  for (auto r : language.relation_symbols()) {
    rel_tables[r].assign(s.relation_table(r).size(), alg.bot());
  }

  for (auto atom : atoms) {
    // A random partition, coarsened until every function respects it.
    UnionFind uf(m);
    for (std::size_t x = 1; x < m; ++x) {
      if (pick(2) == 0) uf.unite(x, pick(x));
    }
    bool changed = true;
    while (changed) {
      changed = false;
      for (auto f : language.function_symbols()) {
        if (f.arity == 0) continue;
        std::vector<std::size_t> xs(f.arity, 0);
        do {
          for (std::size_t i = 0; i < f.arity; ++i) {
            auto ys = xs;
            for (std::size_t y = 0; y < m; ++y) {
              if (uf.find(y) != uf.find(xs[i])) continue;
              ys[i] = y;
              changed |= uf.unite(s.apply_function(f, xs), s.apply_function(f, ys));
            }
          }
        } while (next_tuple(xs, m));
      }
    }
    for (std::size_t x = 0; x < m; ++x) {
      for (std::size_t y = 0; y < m; ++y) {
        if (uf.find(x) == uf.find(y)) eq[x * m + y] = alg.join(eq[x * m + y], atom);
      }
    }
    for (auto r : language.relation_symbols()) {
      std::map<std::vector<std::size_t>, bool> by_class;
      std::vector<std::size_t> xs(r.arity, 0);
      auto& table = rel_tables[r];
      std::size_t cell = 0;
      do {
        std::vector<std::size_t> classes;
        for (auto x : xs) classes.push_back(uf.find(x));
        auto [it, fresh] = by_class.try_emplace(classes, false);
        if (fresh) it->second = pick(2) == 1;
        if (it->second) table[cell] = alg.join(table[cell], atom);
        ++cell;
      } while (next_tuple(xs, m));
    }
  }
  s.set_equality(std::move(eq));
  for (auto& [r, table] : rel_tables) s.set_relation(r, std::move(table));
  return s;
}

}  // namespace bvl::semantics
