#pragma once

#include <string>
#include <vector>

#include "bvl/proof.hpp"
#include "bvl/syntax.hpp"

namespace bvl::kernel {

/// Language of the proof corpus: propositions p, q, r, unary relation U,
/// binary relation R, constant c and unary function f.
const Language& corpus_language();

struct CorpusEntry {
  std::string name;
  Context context;
  Formula goal;
  Proof proof;
};

/// Hand-written derivations covering every rule: identity, K, S,
/// hypothetical syllogism (closed and from hypotheses), double negation,
/// Peirce's law, instantiation, symmetry and congruence of equality,
/// generalisation and an existential introduction. Every entry checks.
const std::vector<CorpusEntry>& standard_proofs();

}  // namespace bvl::kernel
