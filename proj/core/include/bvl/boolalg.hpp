#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bvl::boolalg {

/// Opaque handle to an element of a FinCBA. Every finite Boolean algebra is
/// the powerset of its atoms; the handle stores which atoms lie below the
/// element, so lattice operations are bitwise once the algebra is built.
struct Elem {
  std::uint32_t bits = 0;

  friend auto operator<=>(const Elem&, const Elem&) = default;
};

/// Operations on an explicit carrier 0..n-1, as handed to FinCBA::build.
struct AlgebraTables {
  std::size_t size = 0;
  /// Optional display names per element; may be empty.
  std::vector<std::string> labels;
  /// Optional concrete encoding per element (a point set); may be empty.
  std::vector<std::uint64_t> encodings;
  std::function<std::size_t(std::size_t, std::size_t)> meet;
  std::function<std::size_t(std::size_t, std::size_t)> join;
  std::function<std::size_t(std::size_t)> neg;
  std::size_t top = 0;
  std::size_t bot = 0;
};

/// Runs the Boolean-algebra axiom battery over `tables`: exhaustive over all
/// triples when the carrier has at most 64 elements, otherwise 1000 seeded
/// random triples. Returns the first violated law, if any.
std::optional<std::string> axiom_violation(const AlgebraTables& tables);

/// A finite (hence complete) Boolean algebra.
class FinCBA {
 public:
  /// Checks the axioms, finds the atoms and re-indexes the carrier by atom
  /// masks. Error(Invalid) if the tables are not a Boolean algebra.
  static FinCBA build(std::string name, const AlgebraTables& tables);

  /// Explicit operation tables indexed by carrier position.
  static FinCBA from_tables(std::string name, std::vector<std::string> labels,
                            std::vector<std::vector<std::size_t>> meet,
                            std::vector<std::vector<std::size_t>> join, std::vector<std::size_t> neg,
                            std::size_t top, std::size_t bot);

  /// All subsets of {0..n-1}; n <= 16.
  static FinCBA powerset(std::size_t n);

  const std::string& name() const { return name_; }
  std::size_t size() const { return std::size_t{1} << atom_count_; }
  std::size_t atom_count() const { return atom_count_; }

  Elem top() const { return Elem{full_mask()}; }
  Elem bot() const { return Elem{0}; }
  Elem meet(Elem a, Elem b) const { return Elem{a.bits & b.bits}; }
  Elem join(Elem a, Elem b) const { return Elem{a.bits | b.bits}; }
  Elem neg(Elem a) const { return Elem{~a.bits & full_mask()}; }
  /// Material implication, not a or b.
  Elem imp(Elem a, Elem b) const { return join(neg(a), b); }
  Elem biimp(Elem a, Elem b) const { return meet(imp(a, b), imp(b, a)); }
  bool le(Elem a, Elem b) const { return (a.bits & ~b.bits) == 0; }
  bool contains(Elem a) const { return (a.bits & ~full_mask()) == 0; }

  /// Infimum / supremum of a finite family; empty families give top / bot.
  Elem inf(std::span<const Elem> xs) const;
  Elem sup(std::span<const Elem> xs) const;

  Elem element(std::size_t index) const;
  std::size_t index(Elem a) const { return a.bits; }
  std::vector<Elem> elements() const;
  std::vector<Elem> atoms() const;

  /// Human-readable name of an element, e.g. "{0,2}" for set-encoded algebras.
  std::string label(Elem a) const;
  /// Concrete encoding (point set, subset bits, or carrier position).
  std::uint64_t encoding(Elem a) const;
  /// Handle whose concrete encoding is `code`, if any.
  std::optional<Elem> find_encoding(std::uint64_t code) const;

  /// Carrier, atoms and (for carriers of at most 64 elements) the operation
  /// tables, one item per line.
  std::string dump() const;

  friend bool operator==(const FinCBA&, const FinCBA&) = default;

 private:
  FinCBA() = default;
  std::uint32_t full_mask() const {
    return atom_count_ == 32 ? ~0u : ((std::uint32_t{1} << atom_count_) - 1);
  }

  std::string name_;
  std::size_t atom_count_ = 0;
  /// Empty for powerset algebras, where encoding == handle.
  std::vector<std::uint64_t> encodings_;
  std::vector<std::string> labels_;
};

using PointSet = std::uint64_t;

/// A finite topological space on points 0..n-1 (n <= 64), given by its opens.
class FinTopSpace {
 public:
  /// Error(Invalid) unless the opens contain the empty and full sets and are
  /// closed under pairwise union and intersection.
  FinTopSpace(std::size_t points, std::vector<PointSet> opens);

  static FinTopSpace discrete(std::size_t points);
  static FinTopSpace indiscrete(std::size_t points);
  /// Points {0,1} with opens {}, {1}, {0,1}.
  static FinTopSpace sierpinski();

  std::size_t points() const { return points_; }
  /// Sorted ascending by bitmask.
  const std::vector<PointSet>& opens() const { return opens_; }
  PointSet full() const;
  bool is_open(PointSet s) const;

  PointSet interior(PointSet s) const;
  PointSet closure(PointSet s) const;
  /// Complement of the closure; Error(Precondition) unless u is open.
  PointSet perp(PointSet u) const;
  bool is_regular_open(PointSet u) const;

  /// `points N` then one open per line as sorted point indices, `-` for the
  /// empty set. `#` starts a comment.
  std::string to_text() const;
  static FinTopSpace from_text(std::string_view text);

 private:
  std::size_t points_;
  std::vector<PointSet> opens_;
};

std::string format_point_set(PointSet s);

/// The regular open algebra; at most 12 points.
FinCBA regular_open_algebra(const FinTopSpace& space);

/// Every topology on n labelled points, n <= 4.
std::vector<FinTopSpace> enumerate_topologies(std::size_t n);

struct AntichainResult {
  std::size_t size = 0;
  std::vector<Elem> witness;
  /// True when an exhaustive search certified maximality.
  bool exact = false;
};

/// Largest family of pairwise disjoint nonzero elements. Exact branch and
/// bound for carriers up to 2^8, greedy above that.
AntichainResult max_antichain(const FinCBA& algebra);

bool is_antichain(const FinCBA& algebra, std::span<const Elem> family);

/// Every member is nonzero and every nonzero element lies above a member.
bool is_dense_suborder(const FinCBA& algebra, std::span<const Elem> family);

/// Decides a <= b by quantifying over all contexts: for every g, g <= a
/// implies g <= b.
bool yoneda_le(const FinCBA& algebra, Elem a, Elem b);

/// Finite algebras are always sigma-closed: a descending chain of nonzero
/// elements stabilises and its last member bounds it. The check confirms the
/// finite witness, namely that every nonzero element lies above an atom.
bool is_sigma_closed(const FinCBA& algebra);

/// `iso[i]` is the image of handle i; checks bijectivity and preservation of
/// meet, join and negation on all pairs.
bool is_isomorphism(const FinCBA& from, const FinCBA& to, std::span<const Elem> iso);

/// Lattice expressions over named atoms, used by tautology_le.
class LatticeExpr {
 public:
  enum class Kind { Atom, Top, Bot, Neg, Meet, Join, Imp };

  static LatticeExpr atom(std::string name);
  static LatticeExpr top();
  static LatticeExpr bot();
  static LatticeExpr neg(LatticeExpr a);
  static LatticeExpr meet(LatticeExpr a, LatticeExpr b);
  static LatticeExpr join(LatticeExpr a, LatticeExpr b);
  static LatticeExpr imp(LatticeExpr a, LatticeExpr b);

  /// ASCII syntax: names, `top`, `bot`, `~a`, `a & b`, `a | b`, `a -> b`
  /// (right associative, loosest), parentheses.
  static LatticeExpr parse(std::string_view text);

  Kind kind() const { return node_->kind; }
  const std::string& name() const { return node_->name; }
  const LatticeExpr& lhs() const { return node_->children.at(0); }
  const LatticeExpr& rhs() const { return node_->children.at(1); }

  std::vector<std::string> atom_names() const;
  Elem evaluate(const FinCBA& algebra, const std::map<std::string, Elem>& env) const;
  std::string to_string() const;

 private:
  struct Node {
    Kind kind;
    std::string name;
    std::vector<LatticeExpr> children;
  };
  explicit LatticeExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

struct TautologyResult {
  bool holds = true;
  /// Assignment falsifying the inequality when `holds` is false.
  std::map<std::string, Elem> witness;
  bool exhaustive = false;
  bool two_valued = true;
};

constexpr std::size_t kMaxTautologyAtoms = 8;

/// Decides whether lhs <= rhs under every assignment of carrier elements to
/// atoms. Exhaustive when |B|^atoms <= 2^20; the two-element reduction always
/// runs and must agree with the exhaustive verdict. Error(SizeGuard) beyond
/// 8 atoms.
TautologyResult tautology_le(const FinCBA& algebra, const LatticeExpr& lhs, const LatticeExpr& rhs);

}  // namespace bvl::boolalg
