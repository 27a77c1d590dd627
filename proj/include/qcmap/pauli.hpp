#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>

#include "qcmap/gf2.hpp"

namespace qcmap {

// n-qubit Pauli operator i^phase_pow * W_1 (x) ... (x) W_n, where the letter
// on qubit l is I, X, Z, Y for (x_l, z_l) = (0,0), (1,0), (0,1), (1,1).
// Letters are the Hermitian Pauli matrices, so all phase information lives in
// phase_pow and the operator is Hermitian exactly when phase_pow is even.
struct PauliString {
  std::uint8_t phase_pow = 0;  // power of i, in {0,1,2,3}
  BitVec x, z;

  std::size_t num_qubits() const { return x.size(); }
  bool is_hermitian() const { return (phase_pow & 1u) == 0; }
  bool operator==(const PauliString&) const = default;
};

PauliString identity_string(std::size_t n);
// Text form: optional prefix in {+, -, i, -i, +i} then letters in {I,X,Y,Z}.
PauliString parse_pauli(std::string_view text);
// Canonical form: no leading '+', lowercase 'i' (e.g. "-iYX").
std::string format_pauli(const PauliString& p);
char letter_at(const PauliString& p, std::size_t i);

// Exact operator product, phase included.
PauliString mul(const PauliString& a, const PauliString& b);
PauliString adjoint(const PauliString& a);
PauliString times_i_power(PauliString a, unsigned power);
// a*a == square_sign(a) * identity; always +1 or -1.
int square_sign(const PauliString& a);

// Symplectic product a.x*b.z + a.z*b.x mod 2: true iff ab = -ba.
bool anticommutes(const PauliString& a, const PauliString& b);
// Equality of the letter part, ignoring phase_pow.
bool equal_up_to_phase(const PauliString& a, const PauliString& b);

// Concatenated (x | z) row used for GF(2) span arguments.
BitVec symplectic_row(const PauliString& p);

struct FrustrationGraph {
  std::size_t m = 0;
  Gf2Matrix adj;  // symmetric, zero diagonal; adj[i][j] = 1 iff g_i ~ g_j
  bool edge(std::size_t i, std::size_t j) const { return adj.get(i, j); }
};

FrustrationGraph frustration_graph(std::span<const PauliString> gens);

}  // namespace qcmap
