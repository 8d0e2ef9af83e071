#include "bvl/forcing.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <map>
#include <sstream>

#include "bvl/error.hpp"
#include "text_util.hpp"

namespace bvl::forcing {

PairSet make_pair_set(std::vector<Pair> pairs) {
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  return pairs;
}

namespace {

bool includes(const PairSet& big, const PairSet& small) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

bool meets(const PairSet& a, const PairSet& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      return true;
    }
  }
  return false;
}

PairSet unite(const PairSet& a, const PairSet& b) {
  PairSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::string pair_text(const Pair& p) {
  return std::to_string(p.first) + ":" + std::to_string(p.second);
}

}  // namespace

CohenCondition::CohenCondition(PairSet ins, PairSet out)
    : ins_(make_pair_set(std::move(ins))), out_(make_pair_set(std::move(out))) {
  if (meets(ins_, out_)) fail(ErrorCode::Invalid, "cohen condition: ins and out overlap");
}

bool CohenCondition::extends(const CohenCondition& weaker) const {
  return includes(ins_, weaker.ins_) && includes(out_, weaker.out_);
}

std::optional<CohenCondition> CohenCondition::combine(const CohenCondition& other) const {
  if (clashes(other)) return std::nullopt;
  return CohenCondition(unite(ins_, other.ins_), unite(out_, other.out_));
}

bool CohenCondition::clashes(const CohenCondition& other) const {
  return meets(ins_, other.out_) || meets(out_, other.ins_);
}

Region::Region(std::size_t ground_size) : ground_size_(ground_size) {
  require_size(ground_size <= kMaxIotaGround, "region: ground larger than 12");
  words_.assign((universe_size() + 63) / 64, 0);
}

bool Region::contains(std::uint64_t subset) const {
  return subset < universe_size() && ((words_[subset / 64] >> (subset % 64)) & 1u);
}

void Region::insert(std::uint64_t subset) {
  if (subset >= universe_size()) fail(ErrorCode::Precondition, "region: subset outside ground");
  words_[subset / 64] |= std::uint64_t{1} << (subset % 64);
}

std::size_t Region::count() const {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool Region::subset_of(const Region& other) const {
  if (other.ground_size_ != ground_size_) fail(ErrorCode::Precondition, "region: ground mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & ~other.words_[i]) return false;
  }
  return true;
}

Region Region::meet(const Region& other) const {
  if (other.ground_size_ != ground_size_) fail(ErrorCode::Precondition, "region: ground mismatch");
  Region r(ground_size_);
  for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] & other.words_[i];
  return r;
}

Region Region::join(const Region& other) const {
  if (other.ground_size_ != ground_size_) fail(ErrorCode::Precondition, "region: ground mismatch");
  Region r(ground_size_);
  for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] | other.words_[i];
  return r;
}

boolalg::Elem Region::to_elem() const {
  require_size(ground_size_ <= 4, "region: ground larger than 4 has no algebra handle");
  return boolalg::Elem{static_cast<std::uint32_t>(words_[0])};
}

namespace {

std::uint64_t mask_of(const PairSet& pairs, std::span<const Pair> ground) {
  std::uint64_t mask = 0;
  for (const auto& p : pairs) {
    auto it = std::find(ground.begin(), ground.end(), p);
    if (it == ground.end()) {
      fail(ErrorCode::Precondition, "cohen: pair " + pair_text(p) + " is not in the ground");
    }
    mask |= std::uint64_t{1} << (it - ground.begin());
  }
  return mask;
}

void check_ground(std::span<const Pair> ground, std::size_t limit) {
  require_size(ground.size() <= limit,
               "cohen: ground larger than " + std::to_string(limit));
  auto sorted = make_pair_set({ground.begin(), ground.end()});
  if (sorted.size() != ground.size()) fail(ErrorCode::Invalid, "cohen: repeated ground pair");
}

}  // namespace

Region cohen_iota(const CohenCondition& p, std::span<const Pair> ground) {
  check_ground(ground, kMaxIotaGround);
  auto ins = mask_of(p.ins(), ground);
  auto out = mask_of(p.out(), ground);
  Region r(ground.size());
  for (std::uint64_t s = 0; s < r.universe_size(); ++s) {
    if ((s & ins) == ins && (s & out) == 0) r.insert(s);
  }
  return r;
}

std::vector<CohenCondition> all_conditions(std::span<const Pair> ground) {
  check_ground(ground, kMaxIotaGround);
  std::vector<CohenCondition> out;
  std::vector<int> digit(ground.size(), 0);
  while (true) {
    PairSet ins, outs;
    for (std::size_t i = 0; i < ground.size(); ++i) {
      if (digit[i] == 1) ins.push_back(ground[i]);
      if (digit[i] == 2) outs.push_back(ground[i]);
    }
    out.emplace_back(std::move(ins), std::move(outs));
    std::size_t i = ground.size();
    while (i > 0 && ++digit[i - 1] == 3) digit[--i] = 0;
    if (i == 0) break;
  }
  return out;
}

std::vector<CohenCondition> total_specifications(std::span<const Pair> ground) {
  check_ground(ground, kMaxIotaGround);
  std::vector<CohenCondition> out;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << ground.size()); ++s) {
    PairSet ins, outs;
    for (std::size_t i = 0; i < ground.size(); ++i) {
      ((s >> i) & 1u ? ins : outs).push_back(ground[i]);
    }
    out.emplace_back(std::move(ins), std::move(outs));
  }
  return out;
}

std::vector<Pair> standard_ground(std::size_t size) {
  std::vector<Pair> out;
  for (std::size_t i = 0; i < size; ++i) out.emplace_back(0, static_cast<std::uint32_t>(i));
  return out;
}

DensityReport cohen_density_check(std::span<const Pair> ground, bool include_total) {
  require_size(ground.size() <= kMaxDensityGround, "cohen density: ground larger than 8");
  auto conditions = all_conditions(ground);
  if (!include_total) {
    std::erase_if(conditions, [&](const CohenCondition& p) {
      return p.ins().size() + p.out().size() == ground.size();
    });
  }
  DensityReport report;
  report.conditions = conditions.size();
  std::vector<Region> images;
  for (const auto& p : conditions) {
    images.push_back(cohen_iota(p, ground));
    if (images.back().empty()) report.nonzero = false;
  }
  // A nonzero element lies above an image exactly when one of its singletons
  // does, and an image lies below a singleton only by being that singleton.
  const std::uint64_t universe = std::uint64_t{1} << ground.size();
  std::vector<bool> covered(universe, false);
  for (const auto& img : images) {
    if (img.count() == 1) {
      for (std::uint64_t s = 0; s < universe; ++s) {
        if (img.contains(s)) covered[s] = true;
      }
    }
  }
  for (std::uint64_t s = 0; s < universe; ++s) {
    if (!covered[s]) {
      report.dense = false;
      report.uncovered = s;
      break;
    }
  }
  if (ground.size() <= 4) {
    auto alg = boolalg::FinCBA::powerset(universe);
    std::vector<boolalg::Elem> family;
    for (const auto& img : images) family.push_back(img.to_elem());
    bool direct = boolalg::is_dense_suborder(alg, family);
    if (direct != report.ok()) {
      fail(ErrorCode::Invalid, "cohen density: singleton reduction disagrees with the direct check");
    }
    report.cross_checked = true;
  }
  return report;
}

IncompatibilityReport cohen_antichain(std::span<const CohenCondition> conditions,
                                      std::span<const Pair> ground) {
  std::vector<Region> images;
  for (const auto& p : conditions) images.push_back(cohen_iota(p, ground));
  IncompatibilityReport report;
  const std::size_t n = conditions.size();
  report.incompatible.assign(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      bool bottom = images[i].meet(images[j]).empty();
      report.incompatible[i][j] = bottom;
      if (bottom != conditions[i].clashes(conditions[j])) report.matches_clash_rule = false;
      if (i != j && !bottom) report.pairwise_incompatible = false;
    }
  }
  return report;
}

namespace {

Pair parse_pair(std::string_view word, std::size_t line_no) {
  auto colon = word.find(':');
  if (colon == std::string_view::npos) {
    fail(ErrorCode::Parse, std::to_string(line_no) + ":1: expected a pair i:n, got '" +
                               std::string(word) + "'");
  }
  auto a = text_util::to_index(word.substr(0, colon), line_no);
  auto b = text_util::to_index(word.substr(colon + 1), line_no);
  constexpr auto cap = std::numeric_limits<std::uint32_t>::max();
  if (a > cap || b > cap) fail(ErrorCode::Parse, std::to_string(line_no) + ":1: pair component too large");
  return {static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b)};
}

}  // namespace

std::vector<CohenCondition> parse_conditions(std::string_view text) {
  std::vector<CohenCondition> out;
  std::size_t line_no = 0;
  for (const auto& line : text_util::lines(text)) {
    ++line_no;
    auto words = text_util::words(text_util::strip_comment(line));
    if (words.empty()) continue;
    if (words.size() == 1 && words[0] == "*") {
      out.emplace_back();
      continue;
    }
    PairSet ins, outs;
    for (const auto& w : words) {
      if (w.size() < 2 || (w[0] != '+' && w[0] != '-')) {
        fail(ErrorCode::Parse, std::to_string(line_no) + ":1: expected +i:n or -i:n, got '" + w + "'");
      }
      (w[0] == '+' ? ins : outs).push_back(parse_pair(std::string_view(w).substr(1), line_no));
    }
    try {
      out.emplace_back(std::move(ins), std::move(outs));
    } catch (const Error& e) {
      fail(ErrorCode::Parse, std::to_string(line_no) + ":1: " + e.what());
    }
  }
  return out;
}

std::string format_condition(const CohenCondition& p) {
  if (p.ins().empty() && p.out().empty()) return "*";
  std::string out;
  for (const auto& x : p.ins()) out += (out.empty() ? "+" : " +") + pair_text(x);
  for (const auto& x : p.out()) out += (out.empty() ? "-" : " -") + pair_text(x);
  return out;
}

bool is_delta_system(const SetFamily& family, std::span<const std::size_t> indices,
                     const FiniteSet& root) {
  if (indices.size() < 2) return false;
  std::vector<std::size_t> sorted(indices.begin(), indices.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  if (sorted.back() >= family.size()) return false;
  for (std::size_t a = 0; a < sorted.size(); ++a) {
    for (std::size_t b = a + 1; b < sorted.size(); ++b) {
      const auto& x = family[sorted[a]];
      const auto& y = family[sorted[b]];
      FiniteSet common;
      std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(common));
      if (common != root) return false;
    }
  }
  return true;
}

std::size_t sunflower_bound(std::size_t max_set_size, std::size_t target) {
  constexpr auto cap = std::numeric_limits<std::size_t>::max();
  std::size_t bound = 1;
  auto mul = [&](std::size_t f) {
    if (f != 0 && bound > cap / f) {
      bound = cap;
    } else {
      bound *= f;
    }
  };
  for (std::size_t i = 2; i <= max_set_size; ++i) mul(i);
  for (std::size_t i = 0; i < max_set_size; ++i) mul(target - 1);
  return bound;
}

namespace {

constexpr std::size_t kExtractBudget = 20000;
constexpr std::size_t kExactBudget = 2000000;

struct Extractor {
  const SetFamily& family;
  std::size_t target;
  std::size_t calls = 0;

  // Members `idx` all contain `core`; look for `target` of them whose
  // remainders outside the core are pairwise disjoint.
  std::optional<DeltaSystem> run(const std::vector<std::size_t>& idx, const FiniteSet& core) {
    ++calls;
    if (idx.size() < target) return std::nullopt;
    auto rest = [&](std::size_t i) {
      FiniteSet r;
      const auto& s = family[i];
      std::set_difference(s.begin(), s.end(), core.begin(), core.end(), std::back_inserter(r));
      return r;
    };
    std::vector<std::size_t> chosen;
    FiniteSet used;
    for (auto i : idx) {
      auto r = rest(i);
      FiniteSet common;
      std::set_intersection(r.begin(), r.end(), used.begin(), used.end(), std::back_inserter(common));
      if (!common.empty()) continue;
      chosen.push_back(i);
      FiniteSet merged;
      std::set_union(r.begin(), r.end(), used.begin(), used.end(), std::back_inserter(merged));
      used = std::move(merged);
      if (chosen.size() == target) {
        std::sort(chosen.begin(), chosen.end());
        return DeltaSystem{chosen, core};
      }
    }
    // Every member meets `used`, so some element of it is popular.
    std::map<std::uint32_t, std::size_t> count;
    for (auto i : idx) {
      for (auto x : rest(i)) {
        if (std::binary_search(used.begin(), used.end(), x)) ++count[x];
      }
    }
    std::vector<std::pair<std::size_t, std::uint32_t>> order;
    for (auto [x, c] : count) order.emplace_back(c, x);
    std::stable_sort(order.begin(), order.end(),
                     [](const auto& a, const auto& b) { return a.first > b.first; });
    bool first = true;
    for (auto [c, x] : order) {
      if (c < target) break;
      // Above the bound the most popular branch always succeeds; the others
      // only help below it, so they are cut off once the budget is spent.
      if (!first && calls > kExtractBudget) break;
      first = false;
      std::vector<std::size_t> sub;
      for (auto i : idx) {
        if (std::binary_search(family[i].begin(), family[i].end(), x)) sub.push_back(i);
      }
      FiniteSet bigger = core;
      bigger.insert(std::upper_bound(bigger.begin(), bigger.end(), x), x);
      if (auto r = run(sub, bigger)) return r;
    }
    return std::nullopt;
  }
};

FiniteSet intersect(const FiniteSet& a, const FiniteSet& b) {
  FiniteSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// Exact fallback for when the extraction above gives up. A Delta-system is
// determined by its two smallest indices, whose intersection is the root;
// each such seed is grown through later members. Bounded by a node budget,
// which small families never reach.
struct ExactSearch {
  const SetFamily& family;
  std::size_t target;
  std::size_t nodes = 0;
  bool exhausted = false;

  bool grow(std::vector<std::size_t>& chosen, const std::vector<std::size_t>& cand, std::size_t from,
            const FiniteSet& root) {
    if (chosen.size() == target) return true;
    for (std::size_t c = from; c < cand.size(); ++c) {
      if (++nodes > kExactBudget) {
        exhausted = true;
        return false;
      }
      if (chosen.size() + (cand.size() - c) < target) return false;
      auto k = cand[c];
      bool fits = std::all_of(chosen.begin(), chosen.end(),
                              [&](std::size_t i) { return intersect(family[i], family[k]) == root; });
      if (!fits) continue;
      chosen.push_back(k);
      if (grow(chosen, cand, c + 1, root)) return true;
      chosen.pop_back();
    }
    return false;
  }

  std::optional<DeltaSystem> run() {
    for (std::size_t i = 0; i < family.size() && !exhausted; ++i) {
      for (std::size_t j = i + 1; j < family.size() && !exhausted; ++j) {
        auto root = intersect(family[i], family[j]);
        std::vector<std::size_t> cand;
        for (std::size_t k = j + 1; k < family.size(); ++k) {
          if (std::includes(family[k].begin(), family[k].end(), root.begin(), root.end())) cand.push_back(k);
        }
        std::vector<std::size_t> chosen{i, j};
        if (grow(chosen, cand, 0, root)) return DeltaSystem{chosen, root};
      }
    }
    return std::nullopt;
  }
};

}  // namespace

std::optional<DeltaSystem> delta_extract(const SetFamily& family, std::size_t target) {
  if (target < 2) fail(ErrorCode::Precondition, "delta_extract: target must be at least 2");
  for (const auto& s : family) {
    if (!std::is_sorted(s.begin(), s.end()) || std::adjacent_find(s.begin(), s.end()) != s.end()) {
      fail(ErrorCode::Precondition, "delta_extract: members must be sorted without repeats");
    }
  }
  std::vector<std::size_t> all(family.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  Extractor ex{family, target};
  if (auto found = ex.run(all, {})) return found;
  return ExactSearch{family, target}.run();
}

SetFamily parse_family(std::string_view text) {
  SetFamily out;
  std::size_t line_no = 0;
  for (const auto& line : text_util::lines(text)) {
    ++line_no;
    auto words = text_util::words(text_util::strip_comment(line));
    if (words.empty()) continue;
    FiniteSet s;
    if (!(words.size() == 1 && words[0] == "-")) {
      for (const auto& w : words) {
        auto v = text_util::to_index(w, line_no);
        if (v > std::numeric_limits<std::uint32_t>::max()) {
          fail(ErrorCode::Parse, std::to_string(line_no) + ":1: element too large");
        }
        if (!s.empty() && v <= s.back()) {
          fail(ErrorCode::Parse, std::to_string(line_no) + ":1: elements must be strictly increasing");
        }
        s.push_back(static_cast<std::uint32_t>(v));
      }
    }
    out.push_back(std::move(s));
  }
  return out;
}

std::string format_set(const FiniteSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s[i]);
  }
  return out + "}";
}

}  // namespace bvl::forcing
