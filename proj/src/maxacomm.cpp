#include "qcmap/maxacomm.hpp"

#include <stdexcept>

#include "qcmap/qca.hpp"

namespace qcmap {

PauliString completion_monomial(std::span<const PauliString> elems) {
  if (elems.empty()) throw std::invalid_argument("completion of an empty set");
  if (elems.size() % 2 != 0) {
    throw std::invalid_argument("completion exists only for even-size anti-commuting sets");
  }
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t j = i + 1; j < elems.size(); ++j) {
      if (!anticommutes(elems[i], elems[j])) {
        throw std::invalid_argument("completion input must be pairwise anti-commuting");
      }
    }
  }
  PauliString prod = identity_string(elems.front().num_qubits());
  for (const auto& e : elems) prod = mul(prod, e);
  if (!prod.is_hermitian()) prod = times_i_power(prod, 1);
  return prod;
}

AnticommutingSet max_anticommuting_set(std::span<const PauliString> gens) {
  if (gens.empty()) throw std::invalid_argument("max_anticommuting_set needs generators");
  const std::size_t n = gens.front().num_qubits();
  for (const auto& g : gens) {
    if (g.num_qubits() != n) throw std::invalid_argument("generator length mismatch");
    if (!g.is_hermitian()) throw std::invalid_argument("generators must be Hermitian");
  }

  AnticommutingSet out;
  out.source_group_gens.assign(gens.begin(), gens.end());

  std::vector<BitVec> rows;
  rows.reserve(gens.size());
  for (const auto& g : gens) rows.push_back(symplectic_row(g));
  const auto independent = greedy_independent_rows(rows);

  if (independent.empty()) {
    out.elements.push_back(gens.front());
    out.completion = gens.front();
    return out;
  }

  std::vector<PauliString> indep_gens;
  for (auto idx : independent) indep_gens.push_back(gens[idx]);
  QcaSpec spec;
  spec.m = indep_gens.size();
  spec.chi = frustration_graph(indep_gens).adj;
  spec.k.clear();
  for (const auto& g : indep_gens) spec.k.push_back(square_sign(g));

  WedderburnDecomposition dec = run_splitting(spec);
  out.s = dec.s;
  if (dec.s == 0) {
    out.elements.push_back(gens.front());
    out.completion = gens.front();
    return out;
  }

  std::vector<Monomial> pair_monomials;
  pair_monomials.reserve(2 * dec.s);
  for (const auto& pb : dec.pairs) {
    pair_monomials.push_back(pb.gamma);
    pair_monomials.push_back(pb.delta);
  }

  // Fold the decoupled pairs back into a fully anti-commuting family: entry t
  // is the product of all earlier pair generators (one fewer for even
  // 1-based positions) times generator t.
  std::vector<Monomial> acc;
  Monomial prefix{BitVec(spec.m), 0};  // z_0 * ... * z_{t-1}
  for (std::size_t t = 0; t < 2 * dec.s; ++t) {
    Monomial a;
    if (t < 2) {
      a = pair_monomials[t];
    } else if (t % 2 == 0) {
      a = monomial_mul(spec, prefix, pair_monomials[t]);
    } else {
      Monomial shorter{BitVec(spec.m), 0};
      for (std::size_t k = 0; k + 1 < t; ++k) shorter = monomial_mul(spec, shorter, pair_monomials[k]);
      a = monomial_mul(spec, shorter, pair_monomials[t]);
    }
    acc.push_back(a);
    prefix = monomial_mul(spec, prefix, pair_monomials[t]);
  }

  for (const auto& mono : acc) {
    PauliString p = identity_string(n);
    for (std::size_t i = 0; i < spec.m; ++i) {
      if (mono.e.get(i)) p = mul(p, indep_gens[i]);
    }
    p = times_i_power(p, mono.phase_pow);
    if (!p.is_hermitian()) p = times_i_power(p, 1);
    out.elements.push_back(p);
  }
  out.completion = completion_monomial(out.elements);
  out.elements.push_back(out.completion);
  return out;
}

}  // namespace qcmap
