#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "bvl/boolalg.hpp"

namespace bvl::fuzz {

struct NamedAlgebra {
  std::string name;
  std::shared_ptr<const boolalg::FinCBA> algebra;
};

/// powerset(1), powerset(2), powerset(3) and the regular open algebras of two
/// small non-discrete spaces, in that order.
const std::vector<NamedAlgebra>& registered_algebras();

struct SoundnessSummary {
  std::size_t trials = 0;
  std::size_t structures = 0;
  std::size_t checks = 0;
  std::size_t violations = 0;
  /// Structures per registered algebra, same order.
  std::vector<std::size_t> per_algebra;
  /// Human-readable description of each violation.
  std::vector<std::string> details;
};

/// Trial i draws a structure over the corpus language on algebra i mod 5
/// with a carrier of 1 to 3 elements, from a generator seeded by (seed, i),
/// validates it, and checks every standard proof for soundness in it. The
/// result depends only on (seed, trials).
SoundnessSummary fuzz_soundness(std::uint64_t seed, std::size_t trials);

/// `key=value` lines, the first being the totals.
std::string format_summary(const SoundnessSummary& s, std::uint64_t seed);

}  // namespace bvl::fuzz
