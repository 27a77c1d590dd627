#pragma once

#include <span>
#include <vector>

#include "qcmap/pauli.hpp"

namespace qcmap {

// Maximal pairwise anti-commuting subset of a Pauli group. Size is always
// odd; every element is a product of the source generators (phase-blind
// membership in the group).
struct AnticommutingSet {
  std::vector<PauliString> elements;
  std::vector<PauliString> source_group_gens;
  std::size_t s = 0;  // number of gamma/delta factors of the group
  PauliString completion;
};

// Ordered product of an even number of pairwise anti-commuting elements,
// Hermitized; it anti-commutes with every input element.
PauliString completion_monomial(std::span<const PauliString> elems);

// Decomposes the group, realizes the s pairs as an anti-commuting family of
// 2s elements expressed back in the original group, and appends the
// completion monomial. Result size 2s + 1, or a single generator when the
// group is abelian.
AnticommutingSet max_anticommuting_set(std::span<const PauliString> gens);

}  // namespace qcmap
