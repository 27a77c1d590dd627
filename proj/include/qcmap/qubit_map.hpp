#pragma once

#include <span>
#include <utility>
#include <vector>

#include "qcmap/pauli.hpp"
#include "qcmap/qca.hpp"

namespace qcmap {

// Concrete realization of a QcaSpec on qubits via its Wedderburn
// decomposition. In independence mode the images act on r + s qubits with the
// r central coordinates first, then one coordinate per pair in pivot order.
// In scalar mode centrals become scalar phases chosen by sign_branch and the
// images act on max(s, 1) qubits.
//
// Every image is Hermitian; generators whose exact image carried an odd power
// of i were multiplied by i once and their indices recorded in `hermitized`
// (such an image squares to -k_i instead of k_i).
struct QubitMapping {
  std::size_t m = 0, s = 0, r = 0;
  bool independence_mode = true;
  std::vector<int> sign_branch;  // one +1/-1 per central in scalar mode
  std::vector<PauliString> images;
  std::vector<std::size_t> hermitized;
  std::vector<std::pair<std::size_t, std::size_t>> pivots;
  Gf2Matrix T, T_inv;

  std::size_t num_image_qubits() const {
    return images.empty() ? 0 : images.front().num_qubits();
  }
};

// Images of the decomposition generators, in T-row order, on a pairs-first
// coordinate layout: pair j gets (i^{(1-c_j)/2} X_j, i^{(1-d_j)/2} Z_j) on
// qubit j; central l gets i^{(1-b_l)/2} Z on coordinate s+l in independence
// mode, or the scalar sign_branch[l] * i^{(1-b_l)/2} in scalar mode.
std::vector<PauliString> assign_irreps(const WedderburnDecomposition& dec, bool independence_mode,
                                       std::span<const int> sign_branch);

// T^{-1} over GF(2); throws std::runtime_error on a singular matrix, which
// cannot happen for matrices produced by run_splitting.
Gf2Matrix invert_relations(const Gf2Matrix& T);

QubitMapping mapping_from_decomposition(const QcaSpec& spec, const WedderburnDecomposition& dec,
                                        bool independence_mode, std::span<const int> sign_branch);

QubitMapping qca_to_qubits(const QcaSpec& spec, const PivotPolicy& policy, bool independence_mode,
                           std::span<const int> sign_branch);

// Complete-graph case of qca_to_qubits: 2N pairwise anti-commuting Hermitian
// generators realized as X/Z with Y-chains.
QubitMapping jordan_wigner(std::size_t N);

// Exact star-isomorphism from a concretely presented Pauli group onto its
// Wedderburn-reduced form. domain_gens/images cover every input, including
// dependent ones; phase_table[t] is the power of i relating images[t] to the
// ascending product of independent images selected by the GF(2) expansion of
// input t.
struct StarIsomorphism {
  std::vector<PauliString> domain_gens;
  std::vector<PauliString> images;
  std::vector<unsigned> phase_table;
  std::vector<std::size_t> independent;  // indices into domain_gens
  std::size_t s = 0, r = 0;
  std::vector<std::pair<std::size_t, std::size_t>> pivots;
  Gf2Matrix independent_rows;  // symplectic rows of the independent subset

  // Image of an arbitrary element of the generated algebra, exact phase
  // included; throws std::invalid_argument if p is outside the group span.
  PauliString map_element(const PauliString& p) const;
};

StarIsomorphism pauli_to_pauli(std::span<const PauliString> gens);

}  // namespace qcmap
