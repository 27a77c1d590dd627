#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "qcmap/pauli.hpp"
#include "qcmap/qca.hpp"
#include "qcmap/qubit_map.hpp"

namespace qcmap {

// Gaussian integer a + bi. All oracle arithmetic is exact; there are no
// tolerances anywhere in this module.
struct Gaussian {
  std::int32_t re = 0;
  std::int32_t im = 0;

  friend constexpr Gaussian operator+(Gaussian a, Gaussian b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend constexpr Gaussian operator-(Gaussian a, Gaussian b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend constexpr Gaussian operator*(Gaussian a, Gaussian b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  constexpr Gaussian conj() const { return {re, -im}; }
  constexpr bool is_zero() const { return re == 0 && im == 0; }
  friend constexpr bool operator==(Gaussian, Gaussian) = default;

  static constexpr Gaussian i_power(unsigned p) {
    switch (p & 3u) {
      case 0: return {1, 0};
      case 1: return {0, 1};
      case 2: return {-1, 0};
      default: return {0, -1};
    }
  }
};

class GaussianMatrix {
 public:
  GaussianMatrix() = default;
  explicit GaussianMatrix(std::size_t dim) : dim_(dim), a_(dim * dim) {}
  static GaussianMatrix identity(std::size_t dim);
  static GaussianMatrix scalar(std::size_t dim, Gaussian v);

  std::size_t dim() const { return dim_; }
  Gaussian& at(std::size_t r, std::size_t c) { return a_[r * dim_ + c]; }
  const Gaussian& at(std::size_t r, std::size_t c) const { return a_[r * dim_ + c]; }

  GaussianMatrix operator*(const GaussianMatrix& o) const;
  GaussianMatrix operator+(const GaussianMatrix& o) const;
  GaussianMatrix operator-(const GaussianMatrix& o) const;
  GaussianMatrix scaled(Gaussian v) const;
  GaussianMatrix adjoint() const;
  bool is_zero() const;
  bool operator==(const GaussianMatrix&) const = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Gaussian> a_;
};

// Dense 2^n x 2^n matrix of a Pauli string, phase included. Capped at 12
// qubits; throws std::invalid_argument beyond that.
GaussianMatrix dense_pauli(const PauliString& p);

struct DenseRep {
  std::size_t dim = 0;
  std::vector<GaussianMatrix> mats;
};

DenseRep dense_generators(const QubitMapping& mapping);
DenseRep dense_generators(std::span<const PauliString> images);

enum class ViolationKind { Square, Commutation, Star, Block };
const char* violation_kind_name(ViolationKind k);

struct Violation {
  ViolationKind kind;
  std::vector<std::size_t> indices;
};

struct Report {
  bool passed = true;
  std::vector<Violation> violations;
};

// Checks M_i^2 = k_i * 1 and M_i M_j = (-1)^{chi_ij} M_j M_i exactly.
Report check_qca_relations(const QcaSpec& spec, const DenseRep& rep);

// Multiplies out words of domain generators and of their images as dense
// matrices: any two words with equal domain products must have equal image
// products (exact phase), the extension map must agree, and daggers must map
// to daggers. Exhaustive up to word_length_cap for at most 4 generators,
// seeded sampling on top of exhaustive length 3 otherwise.
Report check_star_isomorphism(const StarIsomorphism& iso, std::size_t word_length_cap,
                              std::uint64_t seed = 0x5eedULL);

struct BlockCertificate {
  std::vector<std::size_t> diagonal_coords;  // coordinates carrying only I or Z
  std::size_t block_count = 0;               // 2^|diagonal_coords|
  std::size_t block_size = 0;                // 2^(n - |diagonal_coords|)
};

BlockCertificate block_structure(std::span<const PauliString> images);

struct WeightedPauli {
  PauliString op;
  int weight = -1;
};

// Interaction terms X_i Z_j and Z_i X_j (identity elsewhere) for each edge,
// with the -1 weights carried alongside. Vertices are 0-based.
std::vector<WeightedPauli> hamiltonian_terms(
    const std::vector<std::pair<std::size_t, std::size_t>>& edges, std::size_t n);

}  // namespace qcmap
