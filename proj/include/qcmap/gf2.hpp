#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qcmap {

// Fixed-length bit vector over GF(2), packed into 64-bit words. Bits past
// size() are kept zero so whole-word XOR / AND-popcount need no masking.
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

  static BitVec unit(std::size_t n, std::size_t i);
  static BitVec from_string(std::string_view bits);

  std::size_t size() const { return n_; }
  bool get(std::size_t i) const;
  void set(std::size_t i, bool v);
  bool any() const;
  std::size_t popcount() const;
  // Index of the lowest set bit, or size() if none.
  std::size_t first_set() const;

  BitVec& operator^=(const BitVec& o);
  friend BitVec operator^(BitVec a, const BitVec& b) {
    a ^= b;
    return a;
  }
  bool operator==(const BitVec&) const = default;

  std::string to_string() const;
  const std::vector<std::uint64_t>& words() const { return w_; }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> w_;
};

// Parity of |a & b|.
bool and_parity(const BitVec& a, const BitVec& b);
std::size_t and_popcount(const BitVec& a, const BitVec& b);
// Number of set bits of a & b at indices strictly greater than j.
std::size_t and_popcount_above(const BitVec& a, const BitVec& b, std::size_t j);

// Dense GF(2) matrix stored as rows of BitVec.
class Gf2Matrix {
 public:
  Gf2Matrix() = default;
  Gf2Matrix(std::size_t rows, std::size_t cols);
  static Gf2Matrix identity(std::size_t n);
  static Gf2Matrix from_rows(std::vector<BitVec> rows);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  BitVec& row(std::size_t i) { return rows_[i]; }
  const BitVec& row(std::size_t i) const { return rows_[i]; }
  bool get(std::size_t i, std::size_t j) const { return rows_[i].get(j); }
  void set(std::size_t i, std::size_t j, bool v) { rows_[i].set(j, v); }

  std::size_t rank() const;
  std::optional<Gf2Matrix> inverse() const;
  // Coefficients c (one per row) with sum_i c_i * row_i == target, if any.
  std::optional<BitVec> solve(const BitVec& target) const;

  bool operator==(const Gf2Matrix&) const = default;

 private:
  std::size_t cols_ = 0;
  std::vector<BitVec> rows_;
};

Gf2Matrix matmul(const Gf2Matrix& a, const Gf2Matrix& b);

// Indices of a greedily chosen (ascending index) maximal independent subset.
std::vector<std::size_t> greedy_independent_rows(const std::vector<BitVec>& rows);

}  // namespace qcmap
