#include "qcmap/qca.hpp"

#include <stdexcept>

namespace qcmap {

void QcaSpec::validate() const {
  if (m == 0) throw std::invalid_argument("QCA spec needs at least one generator");
  if (chi.rows() != m || chi.cols() != m) throw std::invalid_argument("chi must be m x m");
  if (k.size() != m) throw std::invalid_argument("k must have one entry per generator");
  for (std::size_t i = 0; i < m; ++i) {
    if (chi.get(i, i)) throw std::invalid_argument("chi must have zero diagonal");
    for (std::size_t j = i + 1; j < m; ++j) {
      if (chi.get(i, j) != chi.get(j, i)) throw std::invalid_argument("chi must be symmetric");
    }
    if (k[i] != 1 && k[i] != -1) throw std::invalid_argument("squares must be +1 or -1");
  }
}

Monomial unit_monomial(std::size_t m, std::size_t i) {
  return {BitVec::unit(m, i), 0};
}

QcaSpec complete_qca_spec(std::size_t m) {
  QcaSpec spec;
  spec.m = m;
  spec.chi = Gf2Matrix(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (i != j) spec.chi.set(i, j, true);
    }
  }
  spec.k.assign(m, 1);
  return spec;
}

bool monomial_chi(const QcaSpec& spec, const Monomial& a, const Monomial& b) {
  if (a.e.size() != spec.m || b.e.size() != spec.m) {
    throw std::invalid_argument("monomial exponent length mismatch");
  }
  bool acc = false;
  for (std::size_t i = 0; i < spec.m; ++i) {
    if (a.e.get(i)) acc ^= and_parity(spec.chi.row(i), b.e);
  }
  return acc;
}

Monomial monomial_mul(const QcaSpec& spec, const Monomial& a, const Monomial& b) {
  if (a.e.size() != spec.m || b.e.size() != spec.m) {
    throw std::invalid_argument("monomial exponent length mismatch");
  }
  // Moving each factor of b into canonical position crosses every factor of a
  // with a larger index; each anti-commuting crossing contributes a sign, and
  // each cancelled index contributes its square k_i.
  bool cross = false;
  for (std::size_t j = 0; j < spec.m; ++j) {
    if (b.e.get(j)) cross ^= and_popcount_above(a.e, spec.chi.row(j), j) & 1u;
  }
  bool kneg = false;
  for (std::size_t i = 0; i < spec.m; ++i) {
    if (a.e.get(i) && b.e.get(i) && spec.k[i] < 0) kneg = !kneg;
  }
  Monomial out;
  out.e = a.e ^ b.e;
  out.phase_pow =
      static_cast<std::uint8_t>((a.phase_pow + b.phase_pow + 2u * ((cross ^ kneg) ? 1u : 0u)) & 3u);
  return out;
}

int monomial_square_sign(const QcaSpec& spec, const BitVec& e) {
  if (e.size() != spec.m) throw std::invalid_argument("monomial exponent length mismatch");
  bool sign = false;
  for (std::size_t j = 0; j < spec.m; ++j) {
    if (e.get(j)) {
      sign ^= and_popcount_above(e, spec.chi.row(j), j) & 1u;
      if (spec.k[j] < 0) sign = !sign;
    }
  }
  return sign ? -1 : +1;
}

std::vector<Monomial> split_step(const QcaSpec& spec, const std::vector<Monomial>& current,
                                 std::pair<std::size_t, std::size_t> pivot) {
  const auto [u, v] = pivot;
  if (u >= current.size() || v >= current.size() || u == v) {
    throw std::invalid_argument("pivot index out of range");
  }
  if (!monomial_chi(spec, current[u], current[v])) {
    throw std::invalid_argument("pivot pair must anti-commute");
  }
  std::vector<Monomial> next = current;
  for (std::size_t i = 0; i < current.size(); ++i) {
    if (i == u || i == v) continue;
    const bool au = monomial_chi(spec, current[i], current[u]);
    const bool av = monomial_chi(spec, current[i], current[v]);
    if (!au && !av) continue;
    if (!au && av) {
      next[i] = monomial_mul(spec, current[u], current[i]);
    } else if (au && !av) {
      next[i] = monomial_mul(spec, current[v], current[i]);
    } else {
      next[i] = monomial_mul(spec, current[u], monomial_mul(spec, current[v], current[i]));
    }
  }
  return next;
}

namespace {

// Lexicographically smallest anti-commuting pair among unprocessed entries.
bool find_lowest_pair(const QcaSpec& spec, const std::vector<Monomial>& current,
                      const std::vector<bool>& processed, std::pair<std::size_t, std::size_t>* out) {
  for (std::size_t u = 0; u < current.size(); ++u) {
    if (processed[u]) continue;
    for (std::size_t v = u + 1; v < current.size(); ++v) {
      if (processed[v]) continue;
      if (monomial_chi(spec, current[u], current[v])) {
        *out = {u, v};
        return true;
      }
    }
  }
  return false;
}

}  // namespace

WedderburnDecomposition run_splitting(const QcaSpec& spec, const PivotPolicy& policy) {
  spec.validate();
  std::vector<Monomial> current;
  current.reserve(spec.m);
  for (std::size_t i = 0; i < spec.m; ++i) current.push_back(unit_monomial(spec.m, i));
  std::vector<bool> processed(spec.m, false);

  WedderburnDecomposition dec;
  dec.m = spec.m;

  std::size_t next_explicit = 0;
  for (;;) {
    std::pair<std::size_t, std::size_t> pivot;
    if (policy.kind == PivotPolicy::Kind::Explicit && next_explicit < policy.pivots.size()) {
      pivot = policy.pivots[next_explicit++];
      if (pivot.first >= spec.m || pivot.second >= spec.m) {
        throw std::invalid_argument("explicit pivot index out of range");
      }
      if (processed[pivot.first] || processed[pivot.second]) {
        throw std::invalid_argument("explicit pivot names an already-processed vertex");
      }
      if (!monomial_chi(spec, current[pivot.first], current[pivot.second])) {
        throw std::invalid_argument("explicit pivot pair commutes");
      }
    } else if (!find_lowest_pair(spec, current, processed, &pivot)) {
      break;
    }
    current = split_step(spec, current, pivot);
    processed[pivot.first] = true;
    processed[pivot.second] = true;
    dec.pivot_log.push_back(pivot);
  }

  std::vector<BitVec> t_rows;
  t_rows.reserve(spec.m);
  for (auto [u, v] : dec.pivot_log) {
    PairBlock pb;
    pb.gamma = current[u];
    pb.delta = current[v];
    pb.c = monomial_square_sign(spec, pb.gamma.e);
    pb.d = monomial_square_sign(spec, pb.delta.e);
    pb.u = u;
    pb.v = v;
    t_rows.push_back(pb.gamma.e);
    t_rows.push_back(pb.delta.e);
    dec.pairs.push_back(std::move(pb));
  }
  for (std::size_t i = 0; i < spec.m; ++i) {
    if (processed[i]) continue;
    CentralBlock cb;
    cb.beta = current[i];
    cb.b = monomial_square_sign(spec, cb.beta.e);
    cb.index = i;
    t_rows.push_back(cb.beta.e);
    dec.centrals.push_back(std::move(cb));
  }
  dec.s = dec.pairs.size();
  dec.r = dec.centrals.size();
  dec.T = Gf2Matrix::from_rows(std::move(t_rows));
  return dec;
}

}  // namespace qcmap
