#include "bvl/fuzz.hpp"

#include <random>
#include <sstream>

#include "bvl/error.hpp"
#include "bvl/proof_corpus.hpp"
#include "bvl/semantics.hpp"

namespace bvl::fuzz {

const std::vector<NamedAlgebra>& registered_algebras() {
  static const std::vector<NamedAlgebra> algebras = [] {
    using boolalg::FinCBA;
    using boolalg::FinTopSpace;
    auto make = [](FinCBA a) { return std::make_shared<const FinCBA>(std::move(a)); };
    // Points 0 and 1 open and isolated, 2 only in the whole space: four
    // regular opens.
    FinTopSpace three(3, {0b000, 0b001, 0b010, 0b011, 0b111});
    // Two isolated points 0 and 1, with 2 attached to 0 and 3 attached to 1:
    // again four regular opens, but no open singleton is its own closure.
    FinTopSpace four(4, {0b0000, 0b0001, 0b0010, 0b0011, 0b0101, 0b1010, 0b0111, 0b1011, 0b1111});
    return std::vector<NamedAlgebra>{
        {"powerset-1", make(FinCBA::powerset(1))},
        {"powerset-2", make(FinCBA::powerset(2))},
        {"powerset-3", make(FinCBA::powerset(3))},
        {"ro-3", make(boolalg::regular_open_algebra(three))},
        {"ro-4", make(boolalg::regular_open_algebra(four))},
    };
  }();
  return algebras;
}

SoundnessSummary fuzz_soundness(std::uint64_t seed, std::size_t trials) {
  const auto& algebras = registered_algebras();
  const auto& proofs = kernel::standard_proofs();
  SoundnessSummary s;
  s.trials = trials;
  s.per_algebra.assign(algebras.size(), 0);
  for (std::size_t i = 0; i < trials; ++i) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(i >> 32)};
    std::mt19937_64 rng(seq);
    const auto& alg = algebras[i % algebras.size()];
    std::size_t carrier = 1 + std::uniform_int_distribution<std::size_t>(0, 2)(rng);
    auto st = semantics::generate_structure(kernel::corpus_language(), alg.algebra, carrier, rng);
    if (auto d = semantics::validate_structure(st); !d) {
      fail(ErrorCode::Invalid, "fuzz: generated structure is invalid: " + d.failure);
    }
    ++s.structures;
    ++s.per_algebra[i % algebras.size()];
    for (const auto& entry : proofs) {
      ++s.checks;
      auto report = semantics::validate_soundness(st, entry.context, entry.goal, entry.proof);
      if (!report.holds) {
        ++s.violations;
        s.details.push_back("trial=" + std::to_string(i) + " proof=" + entry.name +
                            " algebra=" + alg.name +
                            " hypotheses=" + alg.algebra->label(report.hypotheses) +
                            " conclusion=" + alg.algebra->label(report.conclusion));
      }
    }
  }
  return s;
}

std::string format_summary(const SoundnessSummary& s, std::uint64_t seed) {
  std::ostringstream out;
  out << "seed=" << seed << " trials=" << s.trials << " structures=" << s.structures
      << " checks=" << s.checks << " violations=" << s.violations << "\n";
  const auto& algebras = registered_algebras();
  for (std::size_t k = 0; k < algebras.size(); ++k) {
    out << "algebra=" << algebras[k].name << " structures=" << s.per_algebra[k] << "\n";
  }
  for (const auto& d : s.details) out << "violation " << d << "\n";
  return out.str();
}

}  // namespace bvl::fuzz
