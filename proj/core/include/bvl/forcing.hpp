#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bvl/boolalg.hpp"

namespace bvl::forcing {

/// An index pair, standing in for an element of aleph_2 x N.
using Pair = std::pair<std::uint32_t, std::uint32_t>;
/// Sorted, duplicate-free.
using PairSet = std::vector<Pair>;

PairSet make_pair_set(std::vector<Pair> pairs);

/// A finite partial specification of a subset: `ins` must be in it, `out`
/// must not.
class CohenCondition {
 public:
  CohenCondition() = default;
  /// Error(Invalid) if ins and out meet.
  CohenCondition(PairSet ins, PairSet out);

  const PairSet& ins() const { return ins_; }
  const PairSet& out() const { return out_; }

  /// This condition says at least as much as `weaker`.
  bool extends(const CohenCondition& weaker) const;
  /// Combined specification, if consistent.
  std::optional<CohenCondition> combine(const CohenCondition& other) const;
  /// Some pair is required by one condition and forbidden by the other.
  bool clashes(const CohenCondition& other) const;

  friend bool operator==(const CohenCondition&, const CohenCondition&) = default;

 private:
  PairSet ins_;
  PairSet out_;
};

constexpr std::size_t kMaxIotaGround = 12;
constexpr std::size_t kMaxDensityGround = 8;

/// A set of subsets of the ground: bit S is set for the subset whose members
/// are the ground positions set in S. 2^|ground| bits.
class Region {
 public:
  explicit Region(std::size_t ground_size);

  std::size_t ground_size() const { return ground_size_; }
  std::size_t universe_size() const { return std::size_t{1} << ground_size_; }
  bool contains(std::uint64_t subset) const;
  void insert(std::uint64_t subset);
  std::size_t count() const;
  bool empty() const { return count() == 0; }
  bool is_full() const { return count() == universe_size(); }
  bool subset_of(const Region& other) const;
  Region meet(const Region& other) const;
  Region join(const Region& other) const;

  /// The same region as an element of FinCBA::powerset(2^|ground|); ground
  /// of at most 4 pairs.
  boolalg::Elem to_elem() const;

  friend bool operator==(const Region&, const Region&) = default;

 private:
  std::size_t ground_size_;
  std::vector<std::uint64_t> words_;
};

/// All subsets of the ground extending the specification. Error(Precondition)
/// unless ins and out lie in the ground; at most 12 ground pairs.
Region cohen_iota(const CohenCondition& p, std::span<const Pair> ground);

/// Every condition over the ground (3^|ground| of them), ordered by a
/// base-3 counter with the first ground pair most significant.
std::vector<CohenCondition> all_conditions(std::span<const Pair> ground);

/// The 2^|ground| conditions deciding every ground pair.
std::vector<CohenCondition> total_specifications(std::span<const Pair> ground);

/// Ground {(0,0), (0,1), ...} of the given size.
std::vector<Pair> standard_ground(std::size_t size);

struct DensityReport {
  std::size_t conditions = 0;
  /// No condition maps to bottom.
  bool nonzero = true;
  /// Every nonzero element lies above some image.
  bool dense = true;
  /// A subset whose singleton has no image below it, when not dense.
  std::optional<std::uint64_t> uncovered;
  /// The full is_dense_suborder check on the powerset algebra also ran.
  bool cross_checked = false;

  bool ok() const { return nonzero && dense; }
};

/// Checks that the image of all conditions (optionally without the total
/// ones) is a dense suborder of the powerset of 2^ground. Every nonzero
/// element contains a singleton, so density reduces to the singletons. For a
/// ground of at most 4 pairs the result is cross-checked against
/// boolalg::is_dense_suborder. At most 8 ground pairs.
DensityReport cohen_density_check(std::span<const Pair> ground, bool include_total = true);

struct IncompatibilityReport {
  /// incompatible[i][j]: the images of conditions i and j meet to bottom.
  std::vector<std::vector<bool>> incompatible;
  /// The matrix matches the ins/out clash rule on every pair.
  bool matches_clash_rule = true;
  /// All distinct pairs are incompatible.
  bool pairwise_incompatible = true;
};

IncompatibilityReport cohen_antichain(std::span<const CohenCondition> conditions,
                                      std::span<const Pair> ground);

/// One condition per line: `+i:n` for a required pair, `-i:n` for a
/// forbidden one, `*` alone for the empty condition; `#` comments.
std::vector<CohenCondition> parse_conditions(std::string_view text);
std::string format_condition(const CohenCondition& p);

/// A finite set of naturals, sorted and duplicate-free.
using FiniteSet = std::vector<std::uint32_t>;
using SetFamily = std::vector<FiniteSet>;

struct DeltaSystem {
  /// Ascending family positions.
  std::vector<std::size_t> indices;
  FiniteSet root;
};

/// Pairwise intersections of the selected members all equal `root`. Needs at
/// least two distinct in-range indices.
bool is_delta_system(const SetFamily& family, std::span<const std::size_t> indices,
                     const FiniteSet& root);

/// k! (target-1)^k, saturating at SIZE_MAX.
std::size_t sunflower_bound(std::size_t max_set_size, std::size_t target);

/// Finds `target` members forming a Delta-system: take a maximal disjoint
/// subfamily; if it is too small, restrict to the members through an element
/// of its union and recurse with that element in the root. Succeeds whenever
/// every member has at most k elements and the family has more than
/// sunflower_bound(k, target) members. target >= 2. When that gives up (only
/// possible below the bound) a budgeted exact search takes over; it is
/// complete for small families.
std::optional<DeltaSystem> delta_extract(const SetFamily& family, std::size_t target);

/// One set per line as increasing naturals, `-` for the empty set, `#`
/// comments.
SetFamily parse_family(std::string_view text);
std::string format_set(const FiniteSet& s);

}  // namespace bvl::forcing
