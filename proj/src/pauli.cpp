#include "qcmap/pauli.hpp"

#include <bit>
#include <stdexcept>

namespace qcmap {

PauliString identity_string(std::size_t n) {
  PauliString p;
  p.x = BitVec(n);
  p.z = BitVec(n);
  return p;
}

PauliString parse_pauli(std::string_view text) {
  std::size_t pos = 0;
  int sign = +1;
  unsigned phase = 0;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    sign = text[pos] == '-' ? -1 : +1;
    ++pos;
  }
  if (pos < text.size() && text[pos] == 'i') {
    phase = 1;
    ++pos;
  }
  if (pos >= text.size()) throw std::invalid_argument("Pauli string has no letters: '" + std::string(text) + "'");
  PauliString p = identity_string(text.size() - pos);
  p.phase_pow = static_cast<std::uint8_t>((phase + (sign < 0 ? 2 : 0)) & 3u);
  for (std::size_t i = 0; pos < text.size(); ++pos, ++i) {
    switch (text[pos]) {
      case 'I':
        break;
      case 'X':
        p.x.set(i, true);
        break;
      case 'Z':
        p.z.set(i, true);
        break;
      case 'Y':
        p.x.set(i, true);
        p.z.set(i, true);
        break;
      default:
        throw std::invalid_argument("unknown Pauli letter '" + std::string(1, text[pos]) + "'");
    }
  }
  return p;
}

std::string format_pauli(const PauliString& p) {
  static const char* prefix[4] = {"", "i", "-", "-i"};
  std::string s = prefix[p.phase_pow & 3u];
  for (std::size_t i = 0; i < p.num_qubits(); ++i) s += letter_at(p, i);
  return s;
}

char letter_at(const PauliString& p, std::size_t i) {
  const bool xb = p.x.get(i);
  const bool zb = p.z.get(i);
  if (xb && zb) return 'Y';
  if (xb) return 'X';
  if (zb) return 'Z';
  return 'I';
}

PauliString mul(const PauliString& a, const PauliString& b) {
  if (a.num_qubits() != b.num_qubits()) throw std::invalid_argument("Pauli length mismatch");
  PauliString out;
  out.x = a.x ^ b.x;
  out.z = a.z ^ b.z;
  // Per-qubit phase of W(a)W(b) = i^t W(a+b) with
  // t = xa*za + xb*zb - xc*zc + 2*za*xb, summed over qubits mod 4.
  const auto& ax = a.x.words();
  const auto& az = a.z.words();
  const auto& bx = b.x.words();
  const auto& bz = b.z.words();
  std::uint64_t c1 = 0, c2 = 0, c3 = 0, c4 = 0;
  for (std::size_t i = 0; i < ax.size(); ++i) {
    c1 += std::popcount(ax[i] & az[i]);
    c2 += std::popcount(bx[i] & bz[i]);
    c3 += std::popcount((ax[i] ^ bx[i]) & (az[i] ^ bz[i]));
    c4 += std::popcount(az[i] & bx[i]);
  }
  const std::uint64_t t = a.phase_pow + b.phase_pow + c1 + c2 + 3 * c3 + 2 * c4;
  out.phase_pow = static_cast<std::uint8_t>(t & 3u);
  return out;
}

PauliString adjoint(const PauliString& a) {
  PauliString out = a;
  out.phase_pow = static_cast<std::uint8_t>((4 - a.phase_pow) & 3u);
  return out;
}

PauliString times_i_power(PauliString a, unsigned power) {
  a.phase_pow = static_cast<std::uint8_t>((a.phase_pow + power) & 3u);
  return a;
}

int square_sign(const PauliString& a) {
  return (a.phase_pow & 1u) ? -1 : +1;
}

bool anticommutes(const PauliString& a, const PauliString& b) {
  if (a.num_qubits() != b.num_qubits()) throw std::invalid_argument("Pauli length mismatch");
  return and_parity(a.x, b.z) ^ and_parity(a.z, b.x);
}

bool equal_up_to_phase(const PauliString& a, const PauliString& b) {
  return a.x == b.x && a.z == b.z;
}

BitVec symplectic_row(const PauliString& p) {
  const std::size_t n = p.num_qubits();
  BitVec row(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (p.x.get(i)) row.set(i, true);
    if (p.z.get(i)) row.set(n + i, true);
  }
  return row;
}

FrustrationGraph frustration_graph(std::span<const PauliString> gens) {
  if (gens.empty()) throw std::invalid_argument("frustration graph of empty generator list");
  const std::size_t m = gens.size();
  FrustrationGraph g;
  g.m = m;
  g.adj = Gf2Matrix(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (anticommutes(gens[i], gens[j])) {
        g.adj.set(i, j, true);
        g.adj.set(j, i, true);
      }
    }
  }
  return g;
}

}  // namespace qcmap
