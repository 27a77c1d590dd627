#include "qcmap/qubit_map.hpp"

#include <algorithm>
#include <stdexcept>

namespace qcmap {

namespace {

PauliString single_site(std::size_t width, std::size_t coord, char letter, unsigned phase_pow) {
  PauliString p = identity_string(width);
  p.phase_pow = static_cast<std::uint8_t>(phase_pow & 3u);
  if (letter == 'X' || letter == 'Y') p.x.set(coord, true);
  if (letter == 'Z' || letter == 'Y') p.z.set(coord, true);
  return p;
}

// perm[new_coord] = old_coord
PauliString permute_coords(const PauliString& p, const std::vector<std::size_t>& perm) {
  PauliString out = identity_string(perm.size());
  out.phase_pow = p.phase_pow;
  for (std::size_t c = 0; c < perm.size(); ++c) {
    out.x.set(c, p.x.get(perm[c]));
    out.z.set(c, p.z.get(perm[c]));
  }
  return out;
}

}  // namespace

std::vector<PauliString> assign_irreps(const WedderburnDecomposition& dec, bool independence_mode,
                                       std::span<const int> sign_branch) {
  if (independence_mode) {
    if (!sign_branch.empty()) {
      throw std::invalid_argument("sign_branch must be empty in independence mode");
    }
  } else if (sign_branch.size() != dec.r) {
    throw std::invalid_argument("sign_branch needs one entry per scalar-realized central");
  }
  const std::size_t width = independence_mode ? dec.s + dec.r : std::max<std::size_t>(dec.s, 1);
  std::vector<PauliString> out;
  out.reserve(dec.m);
  for (std::size_t j = 0; j < dec.s; ++j) {
    out.push_back(single_site(width, j, 'X', dec.pairs[j].c < 0 ? 1 : 0));
    out.push_back(single_site(width, j, 'Z', dec.pairs[j].d < 0 ? 1 : 0));
  }
  for (std::size_t l = 0; l < dec.r; ++l) {
    const unsigned base = dec.centrals[l].b < 0 ? 1 : 0;
    if (independence_mode) {
      out.push_back(single_site(width, dec.s + l, 'Z', base));
    } else {
      PauliString scalar = identity_string(width);
      scalar.phase_pow = static_cast<std::uint8_t>((base + (sign_branch[l] < 0 ? 2 : 0)) & 3u);
      out.push_back(scalar);
    }
  }
  return out;
}

Gf2Matrix invert_relations(const Gf2Matrix& T) {
  auto inv = T.inverse();
  if (!inv) throw std::runtime_error("change-of-generators matrix is singular");
  return *inv;
}

QubitMapping mapping_from_decomposition(const QcaSpec& spec, const WedderburnDecomposition& dec,
                                        bool independence_mode, std::span<const int> sign_branch) {
  QubitMapping map;
  map.m = dec.m;
  map.s = dec.s;
  map.r = dec.r;
  map.independence_mode = independence_mode;
  map.sign_branch.assign(sign_branch.begin(), sign_branch.end());
  map.pivots = dec.pivot_log;
  map.T = dec.T;
  map.T_inv = invert_relations(dec.T);

  const std::vector<PauliString> z_images = assign_irreps(dec, independence_mode, sign_branch);
  std::vector<Monomial> z_monomials;
  z_monomials.reserve(dec.m);
  for (const auto& pb : dec.pairs) {
    z_monomials.push_back(pb.gamma);
    z_monomials.push_back(pb.delta);
  }
  for (const auto& cb : dec.centrals) z_monomials.push_back(cb.beta);

  const std::size_t width = z_images.empty() ? 0 : z_images.front().num_qubits();
  for (std::size_t i = 0; i < dec.m; ++i) {
    Monomial prod{BitVec(spec.m), 0};
    PauliString img = identity_string(width);
    for (std::size_t row = 0; row < dec.m; ++row) {
      if (!map.T_inv.get(i, row)) continue;
      prod = monomial_mul(spec, prod, z_monomials[row]);
      img = mul(img, z_images[row]);
    }
    if (prod.e != BitVec::unit(spec.m, i)) {
      throw std::runtime_error("relation inversion did not reproduce the generator");
    }
    // prod equals i^p x_i, so the image of x_i is i^{-p} times the product.
    img = times_i_power(img, (4u - prod.phase_pow) & 3u);
    if (!img.is_hermitian()) {
      img = times_i_power(img, 1);
      map.hermitized.push_back(i);
    }
    map.images.push_back(std::move(img));
  }

  if (independence_mode && dec.r > 0) {
    // Emit central coordinates first, pair coordinates after.
    std::vector<std::size_t> perm;
    perm.reserve(width);
    for (std::size_t l = 0; l < dec.r; ++l) perm.push_back(dec.s + l);
    for (std::size_t j = 0; j < dec.s; ++j) perm.push_back(j);
    for (auto& img : map.images) img = permute_coords(img, perm);
  }
  return map;
}

QubitMapping qca_to_qubits(const QcaSpec& spec, const PivotPolicy& policy, bool independence_mode,
                           std::span<const int> sign_branch) {
  return mapping_from_decomposition(spec, run_splitting(spec, policy), independence_mode,
                                    sign_branch);
}

QubitMapping jordan_wigner(std::size_t N) {
  if (N == 0) throw std::invalid_argument("jordan_wigner needs at least one mode");
  QcaSpec spec = complete_qca_spec(2 * N);
  std::vector<std::pair<std::size_t, std::size_t>> pivots;
  for (std::size_t j = 0; j < N; ++j) pivots.emplace_back(2 * j, 2 * j + 1);
  return qca_to_qubits(spec, PivotPolicy::explicit_pairs(std::move(pivots)), true, {});
}

PauliString StarIsomorphism::map_element(const PauliString& p) const {
  if (p.num_qubits() != domain_gens.front().num_qubits()) {
    throw std::invalid_argument("element width mismatch");
  }
  auto coeffs = independent_rows.solve(symplectic_row(p));
  if (!coeffs) throw std::invalid_argument("element is not in the generated group");
  PauliString canon = identity_string(p.num_qubits());
  PauliString img = identity_string(images.front().num_qubits());
  for (std::size_t t = 0; t < independent.size(); ++t) {
    if (!coeffs->get(t)) continue;
    canon = mul(canon, domain_gens[independent[t]]);
    img = mul(img, images[independent[t]]);
  }
  const unsigned delta = (p.phase_pow - canon.phase_pow + 4u) & 3u;
  return times_i_power(img, delta);
}

StarIsomorphism pauli_to_pauli(std::span<const PauliString> gens) {
  if (gens.empty()) throw std::invalid_argument("pauli_to_pauli needs at least one generator");
  const std::size_t n = gens.front().num_qubits();
  for (const auto& g : gens) {
    if (g.num_qubits() != n) throw std::invalid_argument("generator length mismatch");
    if (!g.is_hermitian()) throw std::invalid_argument("generators must be Hermitian");
  }

  std::vector<BitVec> rows;
  rows.reserve(gens.size());
  for (const auto& g : gens) rows.push_back(symplectic_row(g));
  StarIsomorphism iso;
  iso.domain_gens.assign(gens.begin(), gens.end());
  iso.independent = greedy_independent_rows(rows);

  if (iso.independent.empty()) {
    // Every input is a signed identity; map it to the same scalar on 1 qubit.
    iso.independent_rows = Gf2Matrix(0, 2 * n);
    for (const auto& g : gens) {
      PauliString img = identity_string(1);
      img.phase_pow = g.phase_pow;
      iso.images.push_back(img);
      iso.phase_table.push_back(g.phase_pow);
    }
    return iso;
  }

  std::vector<BitVec> indep_rows;
  for (auto idx : iso.independent) indep_rows.push_back(rows[idx]);
  iso.independent_rows = Gf2Matrix::from_rows(std::move(indep_rows));

  std::vector<PauliString> indep_gens;
  for (auto idx : iso.independent) indep_gens.push_back(gens[idx]);
  FrustrationGraph graph = frustration_graph(indep_gens);
  QcaSpec spec;
  spec.m = indep_gens.size();
  spec.chi = graph.adj;
  spec.k.clear();
  for (const auto& g : indep_gens) spec.k.push_back(square_sign(g));

  QubitMapping mapping = qca_to_qubits(spec, PivotPolicy::lowest_pair(), true, {});
  iso.s = mapping.s;
  iso.r = mapping.r;
  iso.pivots = mapping.pivots;

  iso.images.assign(gens.size(), identity_string(mapping.num_image_qubits()));
  iso.phase_table.assign(gens.size(), 0);
  for (std::size_t t = 0; t < iso.independent.size(); ++t) {
    iso.images[iso.independent[t]] = mapping.images[t];
  }
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (std::find(iso.independent.begin(), iso.independent.end(), i) != iso.independent.end()) {
      continue;
    }
    iso.images[i] = iso.map_element(gens[i]);
  }
  for (std::size_t i = 0; i < gens.size(); ++i) {
    auto coeffs = iso.independent_rows.solve(rows[i]);
    PauliString canon = identity_string(n);
    for (std::size_t t = 0; t < iso.independent.size(); ++t) {
      if (coeffs->get(t)) canon = mul(canon, gens[iso.independent[t]]);
    }
    iso.phase_table[i] = (gens[i].phase_pow - canon.phase_pow + 4u) & 3u;
  }
  return iso;
}

}  // namespace qcmap
