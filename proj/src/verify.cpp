#include "qcmap/verify.hpp"

#include <cstring>
#include <map>
#include <random>
#include <stdexcept>
#include <string>

namespace qcmap {

GaussianMatrix GaussianMatrix::identity(std::size_t dim) {
  GaussianMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m.at(i, i) = {1, 0};
  return m;
}

GaussianMatrix GaussianMatrix::scalar(std::size_t dim, Gaussian v) {
  GaussianMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m.at(i, i) = v;
  return m;
}

GaussianMatrix GaussianMatrix::operator*(const GaussianMatrix& o) const {
  if (dim_ != o.dim_) throw std::invalid_argument("matrix dimension mismatch");
  GaussianMatrix out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t k = 0; k < dim_; ++k) {
      const Gaussian aik = at(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < dim_; ++j) {
        const Gaussian bkj = o.at(k, j);
        if (bkj.is_zero()) continue;
        out.at(i, j) = out.at(i, j) + aik * bkj;
      }
    }
  }
  return out;
}

GaussianMatrix GaussianMatrix::operator+(const GaussianMatrix& o) const {
  if (dim_ != o.dim_) throw std::invalid_argument("matrix dimension mismatch");
  GaussianMatrix out(dim_);
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] + o.a_[i];
  return out;
}

GaussianMatrix GaussianMatrix::operator-(const GaussianMatrix& o) const {
  if (dim_ != o.dim_) throw std::invalid_argument("matrix dimension mismatch");
  GaussianMatrix out(dim_);
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] - o.a_[i];
  return out;
}

GaussianMatrix GaussianMatrix::scaled(Gaussian v) const {
  GaussianMatrix out(dim_);
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] * v;
  return out;
}

GaussianMatrix GaussianMatrix::adjoint() const {
  GaussianMatrix out(dim_);
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t c = 0; c < dim_; ++c) out.at(c, r) = at(r, c).conj();
  }
  return out;
}

bool GaussianMatrix::is_zero() const {
  for (const auto& v : a_) {
    if (!v.is_zero()) return false;
  }
  return true;
}

GaussianMatrix dense_pauli(const PauliString& p) {
  const std::size_t n = p.num_qubits();
  if (n > 12) throw std::invalid_argument("dense expansion capped at 12 qubits");
  const std::size_t dim = std::size_t{1} << n;
  GaussianMatrix m(dim);
  for (std::size_t row = 0; row < dim; ++row) {
    std::size_t col = 0;
    Gaussian val = Gaussian::i_power(p.phase_pow);
    for (std::size_t q = 0; q < n; ++q) {
      const std::size_t shift = n - 1 - q;  // leftmost letter = most significant bit
      const bool xb = p.x.get(q);
      const bool zb = p.z.get(q);
      const bool rbit = (row >> shift) & 1u;
      const bool cbit = rbit ^ xb;
      col |= std::size_t{cbit} << shift;
      if (zb && !xb) {
        if (rbit) val = val * Gaussian{-1, 0};
      } else if (zb && xb) {
        val = val * (rbit ? Gaussian{0, 1} : Gaussian{0, -1});
      }
    }
    m.at(row, col) = val;
  }
  return m;
}

DenseRep dense_generators(std::span<const PauliString> images) {
  DenseRep rep;
  rep.mats.reserve(images.size());
  for (const auto& img : images) rep.mats.push_back(dense_pauli(img));
  rep.dim = rep.mats.empty() ? 0 : rep.mats.front().dim();
  return rep;
}

DenseRep dense_generators(const QubitMapping& mapping) {
  if (mapping.num_image_qubits() > 12) {
    throw std::invalid_argument("dense expansion capped at 12 qubits");
  }
  return dense_generators(std::span<const PauliString>(mapping.images));
}

const char* violation_kind_name(ViolationKind k) {
  switch (k) {
    case ViolationKind::Square: return "square";
    case ViolationKind::Commutation: return "commutation";
    case ViolationKind::Star: return "star";
    default: return "block";
  }
}

Report check_qca_relations(const QcaSpec& spec, const DenseRep& rep) {
  if (rep.mats.size() != spec.m) throw std::invalid_argument("generator count mismatch");
  Report report;
  for (std::size_t i = 0; i < spec.m; ++i) {
    const GaussianMatrix sq = rep.mats[i] * rep.mats[i];
    const GaussianMatrix expect =
        GaussianMatrix::scalar(rep.dim, {spec.k[i] < 0 ? -1 : 1, 0});
    if (!(sq == expect)) {
      report.passed = false;
      report.violations.push_back({ViolationKind::Square, {i}});
    }
  }
  for (std::size_t i = 0; i < spec.m; ++i) {
    for (std::size_t j = i + 1; j < spec.m; ++j) {
      const GaussianMatrix ab = rep.mats[i] * rep.mats[j];
      GaussianMatrix ba = rep.mats[j] * rep.mats[i];
      if (spec.chi_bit(i, j)) ba = ba.scaled({-1, 0});
      if (!(ab == ba)) {
        report.passed = false;
        report.violations.push_back({ViolationKind::Commutation, {i, j}});
      }
    }
  }
  return report;
}

namespace {

std::string matrix_key(const GaussianMatrix& m) {
  std::string key;
  key.resize(m.dim() * m.dim() * sizeof(Gaussian));
  std::size_t off = 0;
  for (std::size_t r = 0; r < m.dim(); ++r) {
    for (std::size_t c = 0; c < m.dim(); ++c) {
      std::memcpy(key.data() + off, &m.at(r, c), sizeof(Gaussian));
      off += sizeof(Gaussian);
    }
  }
  return key;
}

}  // namespace

Report check_star_isomorphism(const StarIsomorphism& iso, std::size_t word_length_cap,
                              std::uint64_t seed) {
  if (iso.domain_gens.size() != iso.images.size()) {
    throw std::invalid_argument("domain and image lists differ in length");
  }
  Report report;
  const std::size_t g = iso.domain_gens.size();
  if (g == 0) return report;

  std::vector<GaussianMatrix> dom, img;
  for (const auto& p : iso.domain_gens) dom.push_back(dense_pauli(p));
  for (const auto& p : iso.images) img.push_back(dense_pauli(p));
  const std::size_t ddim = dom.front().dim();
  const std::size_t idim = img.front().dim();

  // element fingerprint -> (image matrix, witness word)
  std::map<std::string, std::pair<GaussianMatrix, std::vector<std::size_t>>> table;
  table.emplace(matrix_key(GaussianMatrix::identity(ddim)),
                std::make_pair(GaussianMatrix::identity(idim), std::vector<std::size_t>{}));

  auto run_word = [&](const std::vector<std::size_t>& word) {
    GaussianMatrix d = GaussianMatrix::identity(ddim);
    GaussianMatrix q = GaussianMatrix::identity(idim);
    PauliString dp = identity_string(iso.domain_gens.front().num_qubits());
    for (auto t : word) {
      d = d * dom[t];
      q = q * img[t];
      dp = mul(dp, iso.domain_gens[t]);
    }
    const std::string key = matrix_key(d);
    auto it = table.find(key);
    if (it == table.end()) {
      table.emplace(key, std::make_pair(q, word));
    } else if (!(it->second.first == q)) {
      report.passed = false;
      report.violations.push_back({ViolationKind::Star, word});
      return;
    }
    // The extension map must reproduce the image product.
    if (!(dense_pauli(iso.map_element(dp)) == q)) {
      report.passed = false;
      report.violations.push_back({ViolationKind::Star, word});
      return;
    }
    // Dagger of a previously seen element must have the adjoint image.
    auto dag = table.find(matrix_key(d.adjoint()));
    if (dag != table.end() && !(dag->second.first == q.adjoint())) {
      report.passed = false;
      report.violations.push_back({ViolationKind::Star, word});
    }
  };

  const std::size_t exhaustive_cap = g <= 4 ? word_length_cap : std::min<std::size_t>(word_length_cap, 3);
  std::vector<std::size_t> word;
  auto enumerate = [&](auto&& self, std::size_t remaining) -> void {
    if (!report.passed) return;
    if (!word.empty()) run_word(word);
    if (remaining == 0) return;
    for (std::size_t t = 0; t < g; ++t) {
      word.push_back(t);
      self(self, remaining - 1);
      word.pop_back();
    }
  };
  enumerate(enumerate, exhaustive_cap);

  if (g > 4 && word_length_cap > exhaustive_cap && report.passed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, g - 1);
    std::uniform_int_distribution<std::size_t> len(exhaustive_cap + 1, word_length_cap);
    for (int iter = 0; iter < 1500 && report.passed; ++iter) {
      std::vector<std::size_t> w(len(rng));
      for (auto& t : w) t = pick(rng);
      run_word(w);
    }
  }
  return report;
}

BlockCertificate block_structure(std::span<const PauliString> images) {
  if (images.empty()) throw std::invalid_argument("block certificate of empty image list");
  const std::size_t n = images.front().num_qubits();
  for (const auto& img : images) {
    if (img.num_qubits() != n) throw std::invalid_argument("image length mismatch");
  }
  BlockCertificate cert;
  for (std::size_t c = 0; c < n; ++c) {
    bool diagonal = true;
    for (const auto& img : images) {
      if (img.x.get(c)) {
        diagonal = false;
        break;
      }
    }
    if (diagonal) cert.diagonal_coords.push_back(c);
  }
  cert.block_count = std::size_t{1} << cert.diagonal_coords.size();
  cert.block_size = std::size_t{1} << (n - cert.diagonal_coords.size());
  return cert;
}

std::vector<WeightedPauli> hamiltonian_terms(
    const std::vector<std::pair<std::size_t, std::size_t>>& edges, std::size_t n) {
  std::vector<WeightedPauli> terms;
  terms.reserve(2 * edges.size());
  for (auto [i, j] : edges) {
    if (i >= n || j >= n) throw std::invalid_argument("edge vertex out of range");
    if (i == j) throw std::invalid_argument("edge endpoints must differ");
    PauliString xz = identity_string(n);
    xz.x.set(i, true);
    xz.z.set(j, true);
    PauliString zx = identity_string(n);
    zx.z.set(i, true);
    zx.x.set(j, true);
    terms.push_back({std::move(xz), -1});
    terms.push_back({std::move(zx), -1});
  }
  return terms;
}

}  // namespace qcmap
