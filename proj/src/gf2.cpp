#include "qcmap/gf2.hpp"

#include <bit>
#include <stdexcept>

namespace qcmap {

BitVec BitVec::unit(std::size_t n, std::size_t i) {
  BitVec v(n);
  v.set(i, true);
  return v;
}

BitVec BitVec::from_string(std::string_view bits) {
  BitVec v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      v.set(i, true);
    } else if (bits[i] != '0') {
      throw std::invalid_argument("bit string must contain only '0' and '1'");
    }
  }
  return v;
}

bool BitVec::get(std::size_t i) const {
  if (i >= n_) throw std::out_of_range("BitVec index out of range");
  return (w_[i >> 6] >> (i & 63)) & 1u;
}

void BitVec::set(std::size_t i, bool v) {
  if (i >= n_) throw std::out_of_range("BitVec index out of range");
  const std::uint64_t mask = std::uint64_t{1} << (i & 63);
  if (v) {
    w_[i >> 6] |= mask;
  } else {
    w_[i >> 6] &= ~mask;
  }
}

bool BitVec::any() const {
  for (auto w : w_) {
    if (w != 0) return true;
  }
  return false;
}

std::size_t BitVec::popcount() const {
  std::size_t c = 0;
  for (auto w : w_) c += std::popcount(w);
  return c;
}

std::size_t BitVec::first_set() const {
  for (std::size_t wi = 0; wi < w_.size(); ++wi) {
    if (w_[wi] != 0) return wi * 64 + std::countr_zero(w_[wi]);
  }
  return n_;
}

BitVec& BitVec::operator^=(const BitVec& o) {
  if (n_ != o.n_) throw std::invalid_argument("BitVec length mismatch");
  for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
  return *this;
}

std::string BitVec::to_string() const {
  std::string s(n_, '0');
  for (std::size_t i = 0; i < n_; ++i) {
    if (get(i)) s[i] = '1';
  }
  return s;
}

bool and_parity(const BitVec& a, const BitVec& b) {
  return and_popcount(a, b) & 1u;
}

std::size_t and_popcount(const BitVec& a, const BitVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("BitVec length mismatch");
  std::size_t c = 0;
  const auto& wa = a.words();
  const auto& wb = b.words();
  for (std::size_t i = 0; i < wa.size(); ++i) c += std::popcount(wa[i] & wb[i]);
  return c;
}

std::size_t and_popcount_above(const BitVec& a, const BitVec& b, std::size_t j) {
  if (a.size() != b.size()) throw std::invalid_argument("BitVec length mismatch");
  const std::size_t start = j + 1;
  if (start >= a.size()) return 0;
  const auto& wa = a.words();
  const auto& wb = b.words();
  std::size_t c = 0;
  std::size_t wi = start >> 6;
  std::uint64_t first = wa[wi] & wb[wi];
  first &= ~std::uint64_t{0} << (start & 63);
  c += std::popcount(first);
  for (++wi; wi < wa.size(); ++wi) c += std::popcount(wa[wi] & wb[wi]);
  return c;
}

Gf2Matrix::Gf2Matrix(std::size_t rows, std::size_t cols)
    : cols_(cols), rows_(rows, BitVec(cols)) {}

Gf2Matrix Gf2Matrix::identity(std::size_t n) {
  Gf2Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

Gf2Matrix Gf2Matrix::from_rows(std::vector<BitVec> rows) {
  Gf2Matrix m;
  m.cols_ = rows.empty() ? 0 : rows.front().size();
  for (const auto& r : rows) {
    if (r.size() != m.cols_) throw std::invalid_argument("ragged rows");
  }
  m.rows_ = std::move(rows);
  return m;
}

namespace {

struct EchelonRow {
  BitVec vec;
  BitVec track;  // combination of original rows producing vec
  std::size_t pivot;
};

// Row echelon basis with pivot tracking over the original row indices.
std::vector<EchelonRow> echelon(const std::vector<BitVec>& rows) {
  std::vector<EchelonRow> basis;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    BitVec v = rows[i];
    BitVec t = BitVec::unit(rows.size(), i);
    for (const auto& b : basis) {
      if (v.get(b.pivot)) {
        v ^= b.vec;
        t ^= b.track;
      }
    }
    if (v.any()) {
      const std::size_t piv = v.first_set();
      basis.push_back({std::move(v), std::move(t), piv});
    }
  }
  return basis;
}

}  // namespace

std::size_t Gf2Matrix::rank() const {
  return echelon(rows_).size();
}

std::optional<Gf2Matrix> Gf2Matrix::inverse() const {
  if (rows() != cols_) throw std::invalid_argument("inverse of non-square matrix");
  const std::size_t n = rows();
  std::vector<BitVec> work = rows_;
  Gf2Matrix inv = identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && !work[piv].get(col)) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(work[piv], work[col]);
    std::swap(inv.rows_[piv], inv.rows_[col]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i != col && work[i].get(col)) {
        work[i] ^= work[col];
        inv.rows_[i] ^= inv.rows_[col];
      }
    }
  }
  return inv;
}

std::optional<BitVec> Gf2Matrix::solve(const BitVec& target) const {
  if (target.size() != cols_) throw std::invalid_argument("solve width mismatch");
  auto basis = echelon(rows_);
  BitVec v = target;
  BitVec combo(rows());
  for (const auto& b : basis) {
    if (v.get(b.pivot)) {
      v ^= b.vec;
      combo ^= b.track;
    }
  }
  if (v.any()) return std::nullopt;
  return combo;
}

Gf2Matrix matmul(const Gf2Matrix& a, const Gf2Matrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matmul shape mismatch");
  Gf2Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a.get(i, k)) out.row(i) ^= b.row(k);
    }
  }
  return out;
}

std::vector<std::size_t> greedy_independent_rows(const std::vector<BitVec>& rows) {
  std::vector<std::size_t> kept;
  std::vector<std::pair<BitVec, std::size_t>> basis;  // reduced vec, pivot
  for (std::size_t i = 0; i < rows.size(); ++i) {
    BitVec v = rows[i];
    for (const auto& [bv, piv] : basis) {
      if (v.get(piv)) v ^= bv;
    }
    if (v.any()) {
      std::size_t piv = v.first_set();
      basis.emplace_back(std::move(v), piv);
      kept.push_back(i);
    }
  }
  return kept;
}

}  // namespace qcmap
