#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "qcmap/gf2.hpp"

namespace qcmap {

// Abstract presentation of a special quasi-Clifford algebra on m generators:
// generator squares k_i in {+1,-1} and pairwise anti-commutation bits chi_ij.
struct QcaSpec {
  std::size_t m = 0;
  Gf2Matrix chi;       // m x m, symmetric, zero diagonal
  std::vector<int> k;  // one entry +1 or -1 per generator

  void validate() const;  // throws std::invalid_argument on any violation
  bool chi_bit(std::size_t i, std::size_t j) const { return chi.get(i, j); }
};

// i^phase_pow * x_1^{e_1} ... x_m^{e_m}, factors in ascending index order.
struct Monomial {
  BitVec e;
  std::uint8_t phase_pow = 0;
  bool operator==(const Monomial&) const = default;
};

Monomial unit_monomial(std::size_t m, std::size_t i);

// All-pairs anti-commuting spec with unit squares.
QcaSpec complete_qca_spec(std::size_t m);

// 1 iff the two monomials anti-commute; the bilinear form e_a^T chi e_b mod 2.
bool monomial_chi(const QcaSpec& spec, const Monomial& a, const Monomial& b);

// Exact product in the algebra: exponents XOR, phase tracks the sign from
// reordering anti-commuting generators into canonical order and from squares
// k_i of cancelled generators.
Monomial monomial_mul(const QcaSpec& spec, const Monomial& a, const Monomial& b);

// Square of the phase-free part x^e:
// (-1)^(sum_{i<j} e_i e_j chi_ij) * prod_i k_i^{e_i}.
int monomial_square_sign(const QcaSpec& spec, const BitVec& e);

struct PairBlock {
  Monomial gamma, delta;
  int c = 1, d = 1;          // squares of gamma and delta
  std::size_t u = 0, v = 0;  // positions of the pivot pair in the generator list
};

struct CentralBlock {
  Monomial beta;
  int b = 1;
  std::size_t index = 0;  // position in the generator list
};

struct WedderburnDecomposition {
  std::size_t m = 0, r = 0, s = 0;
  std::vector<PairBlock> pairs;        // in pivot order
  std::vector<CentralBlock> centrals;  // ascending position
  // Rows are the exponent vectors of gamma_1, delta_1, ..., gamma_s, delta_s,
  // beta_1, ..., beta_r; always invertible over GF(2).
  Gf2Matrix T;
  std::vector<std::pair<std::size_t, std::size_t>> pivot_log;
};

struct PivotPolicy {
  enum class Kind { LowestPair, Explicit };
  Kind kind = Kind::LowestPair;
  std::vector<std::pair<std::size_t, std::size_t>> pivots;

  static PivotPolicy lowest_pair() { return {}; }
  static PivotPolicy explicit_pairs(std::vector<std::pair<std::size_t, std::size_t>> p) {
    return {Kind::Explicit, std::move(p)};
  }
};

// One decoupling step: the pivot entries stay, every other entry is
// left-multiplied by nothing / the first pivot / the second pivot / both,
// according to its anti-commutation pattern with the pivots. Afterwards both
// pivots commute with every non-pivot entry.
std::vector<Monomial> split_step(const QcaSpec& spec, const std::vector<Monomial>& current,
                                 std::pair<std::size_t, std::size_t> pivot);

// Iterated splitting until no anti-commuting pair remains among unprocessed
// vertices. If an explicit pivot list runs out early, remaining pairs are
// processed with the lowest-pair rule.
WedderburnDecomposition run_splitting(const QcaSpec& spec,
                                      const PivotPolicy& policy = PivotPolicy::lowest_pair());

}  // namespace qcmap
