#include "bvl/boolalg.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <random>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "bvl/error.hpp"
#include "text_util.hpp"

namespace bvl::boolalg {

namespace {

constexpr std::size_t kExhaustiveLimit = 64;
constexpr std::size_t kSpotChecks = 1000;
constexpr std::uint64_t kSpotSeed = 0x5eedb001ULL;
constexpr std::size_t kMaxAtoms = 20;

std::string law(const char* name, std::size_t a, std::size_t b, std::size_t c) {
  std::ostringstream out;
  out << name << " fails at (" << a << ", " << b << ", " << c << ")";
  return out.str();
}

std::optional<std::string> triple_violation(const AlgebraTables& t, std::size_t a, std::size_t b,
                                            std::size_t c) {
  const auto n = t.size;
  auto m = [&](std::size_t x, std::size_t y) { return t.meet(x, y); };
  auto j = [&](std::size_t x, std::size_t y) { return t.join(x, y); };
  if (m(a, b) >= n || j(a, b) >= n || t.neg(a) >= n) return law("closure", a, b, c);
  if (m(a, b) != m(b, a)) return law("meet commutativity", a, b, c);
  if (j(a, b) != j(b, a)) return law("join commutativity", a, b, c);
  if (m(m(a, b), c) != m(a, m(b, c))) return law("meet associativity", a, b, c);
  if (j(j(a, b), c) != j(a, j(b, c))) return law("join associativity", a, b, c);
  if (m(a, j(a, b)) != a) return law("meet absorption", a, b, c);
  if (j(a, m(a, b)) != a) return law("join absorption", a, b, c);
  if (m(a, j(b, c)) != j(m(a, b), m(a, c))) return law("meet distributivity", a, b, c);
  if (j(a, m(b, c)) != m(j(a, b), j(a, c))) return law("join distributivity", a, b, c);
  if (m(a, t.neg(a)) != t.bot) return law("complement (meet)", a, b, c);
  if (j(a, t.neg(a)) != t.top) return law("complement (join)", a, b, c);
  if (m(a, t.top) != a) return law("top identity", a, b, c);
  if (j(a, t.bot) != a) return law("bottom identity", a, b, c);
  return std::nullopt;
}

}  // namespace

std::optional<std::string> axiom_violation(const AlgebraTables& t) {
  if (t.size == 0) return "empty carrier";
  if (t.top >= t.size || t.bot >= t.size) return "top or bottom outside the carrier";
  if (!t.meet || !t.join || !t.neg) return "missing operation";
  if (t.size <= kExhaustiveLimit) {
    for (std::size_t a = 0; a < t.size; ++a) {
      for (std::size_t b = 0; b < t.size; ++b) {
        for (std::size_t c = 0; c < t.size; ++c) {
          if (auto v = triple_violation(t, a, b, c)) return v;
        }
      }
    }
    return std::nullopt;
  }
  std::mt19937_64 rng(kSpotSeed);
  std::uniform_int_distribution<std::size_t> pick(0, t.size - 1);
  for (std::size_t i = 0; i < kSpotChecks; ++i) {
    auto a = pick(rng);
    auto b = pick(rng);
    auto c = pick(rng);
    if (auto v = triple_violation(t, a, b, c)) return v;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// FinCBA

FinCBA FinCBA::build(std::string name, const AlgebraTables& t) {
  if (auto v = axiom_violation(t)) fail(ErrorCode::Invalid, "not a Boolean algebra: " + *v);
  const auto n = t.size;

  // a is an atom iff a != bot and a meets every element in a or bot.
  std::vector<std::size_t> atoms;
  for (std::size_t a = 0; a < n; ++a) {
    if (a == t.bot) continue;
    bool atom = true;
    for (std::size_t b = 0; b < n && atom; ++b) {
      auto m = t.meet(a, b);
      atom = (m == a || m == t.bot);
    }
    if (atom) atoms.push_back(a);
  }
  if (atoms.size() > kMaxAtoms || (std::size_t{1} << atoms.size()) != n) {
    fail(ErrorCode::Invalid, "carrier size " + std::to_string(n) + " does not match " +
                                 std::to_string(atoms.size()) + " atoms");
  }
  if (!t.encodings.empty()) {
    std::sort(atoms.begin(), atoms.end(),
              [&](std::size_t x, std::size_t y) { return t.encodings[x] < t.encodings[y]; });
  }

  std::vector<std::uint32_t> mask(n, 0);
  std::vector<std::size_t> by_mask(n, n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      if (t.meet(atoms[i], x) == atoms[i]) mask[x] |= std::uint32_t{1} << i;
    }
    if (by_mask[mask[x]] != n) {
      fail(ErrorCode::Invalid, "elements " + std::to_string(by_mask[mask[x]]) + " and " +
                                   std::to_string(x) + " lie above the same atoms");
    }
    by_mask[mask[x]] = x;
  }

  // The bitwise operations must reproduce the given ones.
  auto agrees = [&](std::size_t a, std::size_t b) {
    return mask[t.meet(a, b)] == (mask[a] & mask[b]) && mask[t.join(a, b)] == (mask[a] | mask[b]) &&
           mask[t.neg(a)] == (~mask[a] & static_cast<std::uint32_t>(n - 1));
  };
  if (n <= kExhaustiveLimit) {
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (!agrees(a, b)) fail(ErrorCode::Invalid, "atom representation disagrees with tables");
      }
    }
  } else {
    std::mt19937_64 rng(kSpotSeed + 1);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (std::size_t i = 0; i < kSpotChecks; ++i) {
      if (!agrees(pick(rng), pick(rng))) {
        fail(ErrorCode::Invalid, "atom representation disagrees with tables");
      }
    }
  }

  FinCBA out;
  out.name_ = std::move(name);
  out.atom_count_ = atoms.size();
  out.encodings_.resize(n);
  for (std::size_t m = 0; m < n; ++m) {
    const auto x = by_mask[m];
    out.encodings_[m] = t.encodings.empty() ? x : t.encodings[x];
    if (!t.labels.empty()) {
      out.labels_.push_back(t.labels[x]);
    } else if (t.encodings.empty()) {
      out.labels_.push_back(std::to_string(x));
    }
  }
  return out;
}

FinCBA FinCBA::from_tables(std::string name, std::vector<std::string> labels,
                           std::vector<std::vector<std::size_t>> meet,
                           std::vector<std::vector<std::size_t>> join, std::vector<std::size_t> neg,
                           std::size_t top, std::size_t bot) {
  const auto n = meet.size();
  if (join.size() != n || neg.size() != n || (!labels.empty() && labels.size() != n)) {
    fail(ErrorCode::Invalid, "operation tables have inconsistent sizes");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (meet[i].size() != n || join[i].size() != n) {
      fail(ErrorCode::Invalid, "operation tables must be square");
    }
  }
  AlgebraTables t;
  t.size = n;
  t.labels = std::move(labels);
  t.meet = [&meet](std::size_t a, std::size_t b) { return meet[a][b]; };
  t.join = [&join](std::size_t a, std::size_t b) { return join[a][b]; };
  t.neg = [&neg](std::size_t a) { return neg[a]; };
  t.top = top;
  t.bot = bot;
  return build(std::move(name), t);
}

FinCBA FinCBA::powerset(std::size_t n) {
  require_size(n <= 16, "powerset_algebra: ground set of " + std::to_string(n) + " exceeds 16");
  const std::size_t size = std::size_t{1} << n;
  const std::size_t full = size - 1;
  AlgebraTables t;
  t.size = size;
  t.meet = [](std::size_t a, std::size_t b) { return a & b; };
  t.join = [](std::size_t a, std::size_t b) { return a | b; };
  t.neg = [full](std::size_t a) { return ~a & full; };
  t.top = full;
  t.bot = 0;
  if (auto v = axiom_violation(t)) fail(ErrorCode::Invalid, "powerset algebra: " + *v);

  FinCBA out;
  out.name_ = "powerset-" + std::to_string(n);
  out.atom_count_ = n;
  return out;
}

Elem FinCBA::inf(std::span<const Elem> xs) const {
  Elem acc = top();
  for (auto x : xs) acc = meet(acc, x);
  return acc;
}

Elem FinCBA::sup(std::span<const Elem> xs) const {
  Elem acc = bot();
  for (auto x : xs) acc = join(acc, x);
  return acc;
}

Elem FinCBA::element(std::size_t index) const {
  if (index >= size()) {
    fail(ErrorCode::Invalid, "element index " + std::to_string(index) + " outside algebra '" +
                                 name_ + "' of size " + std::to_string(size()));
  }
  return Elem{static_cast<std::uint32_t>(index)};
}

std::vector<Elem> FinCBA::elements() const {
  std::vector<Elem> out(size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = Elem{static_cast<std::uint32_t>(i)};
  return out;
}

std::vector<Elem> FinCBA::atoms() const {
  std::vector<Elem> out;
  for (std::size_t i = 0; i < atom_count_; ++i) out.push_back(Elem{std::uint32_t{1} << i});
  return out;
}

std::string format_point_set(PointSet s) {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < 64; ++i) {
    if ((s >> i) & 1U) {
      if (!first) out += ',';
      out += std::to_string(i);
      first = false;
    }
  }
  return out + "}";
}

std::string FinCBA::label(Elem a) const {
  if (!labels_.empty()) return labels_[a.bits];
  return format_point_set(encoding(a));
}

std::uint64_t FinCBA::encoding(Elem a) const {
  return encodings_.empty() ? a.bits : encodings_[a.bits];
}

std::optional<Elem> FinCBA::find_encoding(std::uint64_t code) const {
  if (encodings_.empty()) {
    if (code < size()) return Elem{static_cast<std::uint32_t>(code)};
    return std::nullopt;
  }
  for (std::size_t i = 0; i < encodings_.size(); ++i) {
    if (encodings_[i] == code) return Elem{static_cast<std::uint32_t>(i)};
  }
  return std::nullopt;
}

std::string FinCBA::dump() const {
  std::ostringstream out;
  out << "algebra " << name_ << '\n';
  out << "size " << size() << '\n';
  out << "atoms";
  for (auto a : atoms()) out << ' ' << index(a);
  out << '\n';
  for (auto e : elements()) out << "element " << index(e) << ' ' << label(e) << '\n';
  if (size() > kExhaustiveLimit) {
    out << "tables omitted\n";
    return out.str();
  }
  auto table = [&](const char* title, auto op) {
    out << title << '\n';
    for (auto a : elements()) {
      bool first = true;
      for (auto b : elements()) {
        out << (first ? "" : " ") << index(op(a, b));
        first = false;
      }
      out << '\n';
    }
  };
  table("meet", [&](Elem a, Elem b) { return meet(a, b); });
  table("join", [&](Elem a, Elem b) { return join(a, b); });
  out << "neg\n";
  bool first = true;
  for (auto a : elements()) {
    out << (first ? "" : " ") << index(neg(a));
    first = false;
  }
  out << '\n';
  return out.str();
}

// ---------------------------------------------------------------------------
// FinTopSpace

namespace {

PointSet full_set(std::size_t points) {
  return points == 64 ? ~PointSet{0} : ((PointSet{1} << points) - 1);
}

}  // namespace

FinTopSpace::FinTopSpace(std::size_t points, std::vector<PointSet> opens) : points_(points) {
  require_size(points <= 64, "topological space: more than 64 points");
  const PointSet all = full_set(points);
  std::sort(opens.begin(), opens.end());
  opens.erase(std::unique(opens.begin(), opens.end()), opens.end());
  for (auto u : opens) {
    if ((u & ~all) != 0) fail(ErrorCode::Invalid, "open set " + format_point_set(u) + " has points out of range");
  }
  std::unordered_set<PointSet> lookup(opens.begin(), opens.end());
  if (!lookup.count(0)) fail(ErrorCode::Invalid, "opens must contain the empty set");
  if (!lookup.count(all)) fail(ErrorCode::Invalid, "opens must contain the full set");
  for (std::size_t i = 0; i < opens.size(); ++i) {
    for (std::size_t j = i + 1; j < opens.size(); ++j) {
      if (!lookup.count(opens[i] | opens[j]) || !lookup.count(opens[i] & opens[j])) {
        fail(ErrorCode::Invalid, "opens not closed under union/intersection at " +
                                     format_point_set(opens[i]) + ", " + format_point_set(opens[j]));
      }
    }
  }
  opens_ = std::move(opens);
}

FinTopSpace FinTopSpace::discrete(std::size_t points) {
  require_size(points <= 16, "discrete space: more than 16 points");
  std::vector<PointSet> opens(std::size_t{1} << points);
  for (std::size_t i = 0; i < opens.size(); ++i) opens[i] = i;
  return FinTopSpace(points, std::move(opens));
}

FinTopSpace FinTopSpace::indiscrete(std::size_t points) {
  return FinTopSpace(points, {0, full_set(points)});
}

FinTopSpace FinTopSpace::sierpinski() { return FinTopSpace(2, {0b00, 0b10, 0b11}); }

PointSet FinTopSpace::full() const { return full_set(points_); }

bool FinTopSpace::is_open(PointSet s) const {
  return std::binary_search(opens_.begin(), opens_.end(), s);
}

PointSet FinTopSpace::interior(PointSet s) const {
  PointSet acc = 0;
  for (auto u : opens_) {
    if ((u & ~s) == 0) acc |= u;
  }
  return acc;
}

PointSet FinTopSpace::closure(PointSet s) const { return full() & ~interior(full() & ~s); }

PointSet FinTopSpace::perp(PointSet u) const {
  if (!is_open(u)) fail(ErrorCode::Precondition, "perp: " + format_point_set(u) + " is not open");
  return full() & ~closure(u);
}

bool FinTopSpace::is_regular_open(PointSet u) const { return is_open(u) && perp(perp(u)) == u; }

std::string FinTopSpace::to_text() const {
  std::ostringstream out;
  out << "points " << points_ << '\n';
  for (auto u : opens_) {
    if (u == 0) {
      out << "-\n";
      continue;
    }
    bool first = true;
    for (std::size_t i = 0; i < points_; ++i) {
      if ((u >> i) & 1U) {
        out << (first ? "" : " ") << i;
        first = false;
      }
    }
    out << '\n';
  }
  return out.str();
}

FinTopSpace FinTopSpace::from_text(std::string_view text) {
  std::optional<std::size_t> points;
  std::vector<PointSet> opens;
  std::size_t line_no = 0;
  for (const auto& line : text_util::lines(text)) {
    ++line_no;
    auto words = text_util::words(text_util::strip_comment(line));
    if (words.empty()) continue;
    if (!points) {
      if (words.size() != 2 || words[0] != "points") {
        fail(ErrorCode::Parse, std::to_string(line_no) + ":1: expected 'points N'");
      }
      points = text_util::to_index(words[1], line_no);
      require_size(*points <= 64, "topology: more than 64 points");
      continue;
    }
    if (words.size() == 1 && words[0] == "-") {
      opens.push_back(0);
      continue;
    }
    PointSet u = 0;
    std::optional<std::size_t> prev;
    for (const auto& w : words) {
      auto p = text_util::to_index(w, line_no);
      if (p >= *points) {
        fail(ErrorCode::Parse, std::to_string(line_no) + ":1: point " + w + " out of range");
      }
      if (prev && p <= *prev) {
        fail(ErrorCode::Parse, std::to_string(line_no) + ":1: point list must be strictly increasing");
      }
      prev = p;
      u |= PointSet{1} << p;
    }
    opens.push_back(u);
  }
  if (!points) fail(ErrorCode::Parse, "1:1: missing 'points N' header");
  return FinTopSpace(*points, std::move(opens));
}

FinCBA regular_open_algebra(const FinTopSpace& space) {
  require_size(space.points() <= 12, "regular_open_algebra: more than 12 points");
  std::vector<PointSet> regular;
  for (auto u : space.opens()) {
    if (space.perp(space.perp(u)) == u) regular.push_back(u);
  }
  std::unordered_map<PointSet, std::size_t> index;
  for (std::size_t i = 0; i < regular.size(); ++i) index.emplace(regular[i], i);
  auto at = [&](PointSet u) {
    auto it = index.find(u);
    return it == index.end() ? regular.size() : it->second;
  };

  AlgebraTables t;
  t.size = regular.size();
  t.encodings.assign(regular.begin(), regular.end());
  t.meet = [&](std::size_t a, std::size_t b) { return at(regular[a] & regular[b]); };
  t.join = [&](std::size_t a, std::size_t b) {
    return at(space.perp(space.perp(regular[a] | regular[b])));
  };
  t.neg = [&](std::size_t a) { return at(space.perp(regular[a])); };
  t.top = at(space.full());
  t.bot = at(0);
  return FinCBA::build("ro-" + std::to_string(space.points()), t);
}

std::vector<FinTopSpace> enumerate_topologies(std::size_t n) {
  require_size(n <= 4, "enumerate_topologies: more than 4 points");
  const PointSet all = full_set(n);
  std::vector<PointSet> middle;
  for (PointSet s = 1; s < all; ++s) middle.push_back(s);
  std::vector<FinTopSpace> out;
  const std::size_t families = std::size_t{1} << middle.size();
  for (std::size_t f = 0; f < families; ++f) {
    std::vector<PointSet> opens{0, all};
    for (std::size_t i = 0; i < middle.size(); ++i) {
      if ((f >> i) & 1U) opens.push_back(middle[i]);
    }
    std::unordered_set<PointSet> lookup(opens.begin(), opens.end());
    bool closed = true;
    for (std::size_t i = 0; i < opens.size() && closed; ++i) {
      for (std::size_t j = i + 1; j < opens.size() && closed; ++j) {
        closed = lookup.count(opens[i] | opens[j]) && lookup.count(opens[i] & opens[j]);
      }
    }
    if (closed) out.emplace_back(n, std::move(opens));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Antichains, density, order

bool is_antichain(const FinCBA& algebra, std::span<const Elem> family) {
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (family[i] == algebra.bot()) return false;
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      if (algebra.meet(family[i], family[j]) != algebra.bot()) return false;
    }
  }
  return true;
}

namespace {

struct AntichainSearch {
  const std::vector<std::uint32_t>& candidates;
  std::uint32_t full;
  std::vector<std::uint32_t> current;
  std::vector<std::uint32_t> best;

  void run(std::size_t from, std::uint32_t used) {
    if (current.size() > best.size()) best = current;
    const auto free_atoms = static_cast<std::size_t>(std::popcount(full & ~used));
    if (current.size() + free_atoms <= best.size()) return;
    for (std::size_t i = from; i < candidates.size(); ++i) {
      if ((candidates[i] & used) != 0) continue;
      current.push_back(candidates[i]);
      run(i + 1, used | candidates[i]);
      current.pop_back();
    }
  }
};

}  // namespace

AntichainResult max_antichain(const FinCBA& algebra) {
  require_size(algebra.size() <= (std::size_t{1} << 16), "antichains: carrier exceeds 2^16");
  std::vector<std::uint32_t> nonzero;
  for (auto e : algebra.elements()) {
    if (e != algebra.bot()) nonzero.push_back(e.bits);
  }
  std::stable_sort(nonzero.begin(), nonzero.end(), [](std::uint32_t a, std::uint32_t b) {
    return std::popcount(a) < std::popcount(b);
  });

  AntichainResult result;
  if (algebra.size() <= 256) {
    AntichainSearch search{nonzero, algebra.top().bits, {}, {}};
    search.run(0, 0);
    for (auto bits : search.best) result.witness.push_back(Elem{bits});
    result.exact = true;
  } else {
    std::uint32_t used = 0;
    for (auto bits : nonzero) {
      if ((bits & used) == 0) {
        result.witness.push_back(Elem{bits});
        used |= bits;
      }
    }
  }
  result.size = result.witness.size();
  return result;
}

bool is_dense_suborder(const FinCBA& algebra, std::span<const Elem> family) {
  for (auto p : family) {
    if (!algebra.contains(p) || p == algebra.bot()) return false;
  }
  for (auto b : algebra.elements()) {
    if (b == algebra.bot()) continue;
    bool below = std::any_of(family.begin(), family.end(), [&](Elem p) { return algebra.le(p, b); });
    if (!below) return false;
  }
  return true;
}

bool yoneda_le(const FinCBA& algebra, Elem a, Elem b) {
  for (auto g : algebra.elements()) {
    if (algebra.le(g, a) && !algebra.le(g, b)) return false;
  }
  return true;
}

bool is_sigma_closed(const FinCBA& algebra) {
  const auto atoms = algebra.atoms();
  for (auto e : algebra.elements()) {
    if (e == algebra.bot()) continue;
    if (std::none_of(atoms.begin(), atoms.end(), [&](Elem a) { return algebra.le(a, e); })) return false;
  }
  return true;
}

bool is_isomorphism(const FinCBA& from, const FinCBA& to, std::span<const Elem> iso) {
  if (iso.size() != from.size() || from.size() != to.size()) return false;
  std::set<Elem> seen;
  for (auto e : iso) {
    if (!to.contains(e) || !seen.insert(e).second) return false;
  }
  auto img = [&](Elem a) { return iso[from.index(a)]; };
  for (auto a : from.elements()) {
    if (img(from.neg(a)) != to.neg(img(a))) return false;
    for (auto b : from.elements()) {
      if (img(from.meet(a, b)) != to.meet(img(a), img(b))) return false;
      if (img(from.join(a, b)) != to.join(img(a), img(b))) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Lattice expressions

LatticeExpr LatticeExpr::atom(std::string name) {
  return LatticeExpr(std::make_shared<const Node>(Node{Kind::Atom, std::move(name), {}}));
}
LatticeExpr LatticeExpr::top() { return LatticeExpr(std::make_shared<const Node>(Node{Kind::Top, "", {}})); }
LatticeExpr LatticeExpr::bot() { return LatticeExpr(std::make_shared<const Node>(Node{Kind::Bot, "", {}})); }
LatticeExpr LatticeExpr::neg(LatticeExpr a) {
  return LatticeExpr(std::make_shared<const Node>(Node{Kind::Neg, "", {std::move(a)}}));
}
LatticeExpr LatticeExpr::meet(LatticeExpr a, LatticeExpr b) {
  return LatticeExpr(std::make_shared<const Node>(Node{Kind::Meet, "", {std::move(a), std::move(b)}}));
}
LatticeExpr LatticeExpr::join(LatticeExpr a, LatticeExpr b) {
  return LatticeExpr(std::make_shared<const Node>(Node{Kind::Join, "", {std::move(a), std::move(b)}}));
}
LatticeExpr LatticeExpr::imp(LatticeExpr a, LatticeExpr b) {
  return LatticeExpr(std::make_shared<const Node>(Node{Kind::Imp, "", {std::move(a), std::move(b)}}));
}

namespace {

class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : text_(text) {}

  LatticeExpr parse() {
    auto e = implication();
    skip();
    if (pos_ != text_.size()) error("unexpected input");
    return e;
  }

 private:
  LatticeExpr implication() {
    auto lhs = disjunction();
    skip();
    if (text_.substr(pos_, 2) == "->") {
      pos_ += 2;
      return LatticeExpr::imp(lhs, implication());
    }
    return lhs;
  }

  LatticeExpr disjunction() {
    auto lhs = conjunction();
    for (;;) {
      skip();
      if (pos_ < text_.size() && text_[pos_] == '|') {
        ++pos_;
        lhs = LatticeExpr::join(lhs, conjunction());
      } else {
        return lhs;
      }
    }
  }

  LatticeExpr conjunction() {
    auto lhs = unary();
    for (;;) {
      skip();
      if (pos_ < text_.size() && text_[pos_] == '&') {
        ++pos_;
        lhs = LatticeExpr::meet(lhs, unary());
      } else {
        return lhs;
      }
    }
  }

  LatticeExpr unary() {
    skip();
    if (pos_ >= text_.size()) error("unexpected end of expression");
    char c = text_[pos_];
    if (c == '~') {
      ++pos_;
      return LatticeExpr::neg(unary());
    }
    if (c == '(') {
      ++pos_;
      auto e = implication();
      skip();
      if (pos_ >= text_.size() || text_[pos_] != ')') error("expected ')'");
      ++pos_;
      return e;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      std::string name(text_.substr(start, pos_ - start));
      if (name == "top") return LatticeExpr::top();
      if (name == "bot") return LatticeExpr::bot();
      return LatticeExpr::atom(std::move(name));
    }
    error(std::string("unexpected character '") + c + "'");
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void error(const std::string& message) const {
    fail(ErrorCode::Parse, "1:" + std::to_string(pos_ + 1) + ": " + message);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void collect_atoms(const LatticeExpr& e, std::set<std::string>& out) {
  switch (e.kind()) {
    case LatticeExpr::Kind::Atom: out.insert(e.name()); return;
    case LatticeExpr::Kind::Top:
    case LatticeExpr::Kind::Bot: return;
    case LatticeExpr::Kind::Neg: collect_atoms(e.lhs(), out); return;
    default:
      collect_atoms(e.lhs(), out);
      collect_atoms(e.rhs(), out);
  }
}

}  // namespace

LatticeExpr LatticeExpr::parse(std::string_view text) { return ExprParser(text).parse(); }

std::vector<std::string> LatticeExpr::atom_names() const {
  std::set<std::string> names;
  collect_atoms(*this, names);
  return {names.begin(), names.end()};
}

Elem LatticeExpr::evaluate(const FinCBA& algebra, const std::map<std::string, Elem>& env) const {
  switch (kind()) {
    case Kind::Atom: {
      auto it = env.find(name());
      if (it == env.end()) fail(ErrorCode::Precondition, "unassigned atom '" + name() + "'");
      return it->second;
    }
    case Kind::Top: return algebra.top();
    case Kind::Bot: return algebra.bot();
    case Kind::Neg: return algebra.neg(lhs().evaluate(algebra, env));
    case Kind::Meet: return algebra.meet(lhs().evaluate(algebra, env), rhs().evaluate(algebra, env));
    case Kind::Join: return algebra.join(lhs().evaluate(algebra, env), rhs().evaluate(algebra, env));
    case Kind::Imp: return algebra.imp(lhs().evaluate(algebra, env), rhs().evaluate(algebra, env));
  }
  return algebra.bot();
}

std::string LatticeExpr::to_string() const {
  switch (kind()) {
    case Kind::Atom: return name();
    case Kind::Top: return "top";
    case Kind::Bot: return "bot";
    case Kind::Neg: return "~" + lhs().to_string();
    case Kind::Meet: return "(" + lhs().to_string() + " & " + rhs().to_string() + ")";
    case Kind::Join: return "(" + lhs().to_string() + " | " + rhs().to_string() + ")";
    case Kind::Imp: return "(" + lhs().to_string() + " -> " + rhs().to_string() + ")";
  }
  return "?";
}

namespace {

// Visits every assignment of `values` to `names`; stops when visit returns false.
template <typename Visit>
bool for_each_assignment(const std::vector<std::string>& names, const std::vector<Elem>& values,
                         Visit visit) {
  std::vector<std::size_t> digits(names.size(), 0);
  std::map<std::string, Elem> env;
  for (;;) {
    for (std::size_t i = 0; i < names.size(); ++i) env[names[i]] = values[digits[i]];
    if (!visit(env)) return false;
    std::size_t i = 0;
    while (i < digits.size() && ++digits[i] == values.size()) digits[i++] = 0;
    if (i == digits.size()) return true;
  }
}

}  // namespace

TautologyResult tautology_le(const FinCBA& algebra, const LatticeExpr& lhs, const LatticeExpr& rhs) {
  std::set<std::string> all;
  for (const auto& n : lhs.atom_names()) all.insert(n);
  for (const auto& n : rhs.atom_names()) all.insert(n);
  std::vector<std::string> names(all.begin(), all.end());
  require_size(names.size() <= kMaxTautologyAtoms,
               "tautology_le: " + std::to_string(names.size()) + " atoms exceeds 8");

  TautologyResult result;

  // Two-element reduction: a finite algebra is a power of 2 and the
  // operations act coordinatewise.
  const auto two = FinCBA::powerset(1);
  std::map<std::string, Elem> two_witness;
  result.two_valued = for_each_assignment(names, two.elements(), [&](const auto& env) {
    if (two.le(lhs.evaluate(two, env), rhs.evaluate(two, env))) return true;
    two_witness = env;
    return false;
  });

  double combos = 1;
  for (std::size_t i = 0; i < names.size(); ++i) combos *= static_cast<double>(algebra.size());
  result.exhaustive = combos <= static_cast<double>(1U << 20);

  if (result.exhaustive) {
    result.holds = for_each_assignment(names, algebra.elements(), [&](const auto& env) {
      if (algebra.le(lhs.evaluate(algebra, env), rhs.evaluate(algebra, env))) return true;
      result.witness = env;
      return false;
    });
    if (algebra.atom_count() > 0 && result.holds != result.two_valued) {
      fail(ErrorCode::Invalid, "tautology_le: exhaustive and two-valued verdicts disagree");
    }
    return result;
  }

  // Degenerate algebra: every inequality holds.
  result.holds = algebra.atom_count() == 0 || result.two_valued;
  if (!result.holds) {
    for (const auto& [name, value] : two_witness) {
      result.witness[name] = value == two.top() ? algebra.top() : algebra.bot();
    }
  }
  return result;
}

}  // namespace bvl::boolalg
