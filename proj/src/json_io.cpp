#include "qcmap/json_io.hpp"

#include <stdexcept>

namespace qcmap {

using nlohmann::json;

namespace {

json monomial_to_json(const Monomial& m) {
  return json{{"e", m.e.to_string()}, {"p", m.phase_pow}};
}

Monomial monomial_from_json(const json& j) {
  Monomial m;
  m.e = BitVec::from_string(j.at("e").get<std::string>());
  const int p = j.at("p").get<int>();
  if (p < 0 || p > 3) throw std::invalid_argument("monomial phase power must be in 0..3");
  m.phase_pow = static_cast<std::uint8_t>(p);
  return m;
}

json pivots_to_json(const std::vector<std::pair<std::size_t, std::size_t>>& pivots) {
  json out = json::array();
  for (auto [u, v] : pivots) out.push_back(json::array({u + 1, v + 1}));
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> pivots_from_json(const json& j) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (const auto& p : j) {
    const long long u = p.at(0).get<long long>();
    const long long v = p.at(1).get<long long>();
    if (u < 1 || v < 1) throw std::invalid_argument("pivot indices are 1-based");
    out.emplace_back(static_cast<std::size_t>(u - 1), static_cast<std::size_t>(v - 1));
  }
  return out;
}

json paulis_to_json(std::span<const PauliString> list) {
  json out = json::array();
  for (const auto& p : list) out.push_back(format_pauli(p));
  return out;
}

std::vector<PauliString> paulis_from_json(const json& j) {
  std::vector<PauliString> out;
  for (const auto& s : j) out.push_back(parse_pauli(s.get<std::string>()));
  return out;
}

}  // namespace

json spec_to_json(const QcaSpec& spec) {
  json edges = json::array();
  for (std::size_t i = 0; i < spec.m; ++i) {
    for (std::size_t j = i + 1; j < spec.m; ++j) {
      if (spec.chi_bit(i, j)) edges.push_back(json::array({i + 1, j + 1}));
    }
  }
  return json{{"m", spec.m}, {"edges", edges}, {"k", spec.k}};
}

QcaSpec spec_from_json(const json& j) {
  QcaSpec spec;
  const long long m = j.at("m").get<long long>();
  if (m < 1) throw std::invalid_argument("spec needs m >= 1");
  spec.m = static_cast<std::size_t>(m);
  spec.chi = Gf2Matrix(spec.m, spec.m);
  for (const auto& e : j.at("edges")) {
    const long long a = e.at(0).get<long long>();
    const long long b = e.at(1).get<long long>();
    if (a < 1 || b < 1 || a > m || b > m) throw std::invalid_argument("edge vertex out of range");
    if (a == b) throw std::invalid_argument("edge endpoints must differ");
    spec.chi.set(static_cast<std::size_t>(a - 1), static_cast<std::size_t>(b - 1), true);
    spec.chi.set(static_cast<std::size_t>(b - 1), static_cast<std::size_t>(a - 1), true);
  }
  spec.k = j.at("k").get<std::vector<int>>();
  spec.validate();
  return spec;
}

json decomposition_to_json(const QcaSpec& spec, const WedderburnDecomposition& dec) {
  json pairs = json::array();
  for (const auto& pb : dec.pairs) {
    pairs.push_back(json{{"gamma", monomial_to_json(pb.gamma)},
                         {"delta", monomial_to_json(pb.delta)},
                         {"c", pb.c},
                         {"d", pb.d}});
  }
  json centrals = json::array();
  for (const auto& cb : dec.centrals) {
    centrals.push_back(json{{"beta", monomial_to_json(cb.beta)}, {"b", cb.b}});
  }
  json t_rows = json::array();
  for (std::size_t i = 0; i < dec.T.rows(); ++i) t_rows.push_back(dec.T.row(i).to_string());
  return json{{"spec", spec_to_json(spec)}, {"m", dec.m},     {"r", dec.r},
              {"s", dec.s},                 {"pairs", pairs}, {"centrals", centrals},
              {"T", t_rows},                {"pivot_log", pivots_to_json(dec.pivot_log)}};
}

WedderburnDecomposition decomposition_from_json(const json& j, QcaSpec* spec_out) {
  QcaSpec spec = spec_from_json(j.at("spec"));
  WedderburnDecomposition dec;
  dec.m = j.at("m").get<std::size_t>();
  dec.r = j.at("r").get<std::size_t>();
  dec.s = j.at("s").get<std::size_t>();
  dec.pivot_log = pivots_from_json(j.at("pivot_log"));
  std::vector<BitVec> t_rows;
  for (const auto& row : j.at("T")) t_rows.push_back(BitVec::from_string(row.get<std::string>()));
  dec.T = Gf2Matrix::from_rows(std::move(t_rows));
  std::size_t pair_idx = 0;
  for (const auto& pj : j.at("pairs")) {
    PairBlock pb;
    pb.gamma = monomial_from_json(pj.at("gamma"));
    pb.delta = monomial_from_json(pj.at("delta"));
    pb.c = pj.at("c").get<int>();
    pb.d = pj.at("d").get<int>();
    if (pair_idx < dec.pivot_log.size()) {
      pb.u = dec.pivot_log[pair_idx].first;
      pb.v = dec.pivot_log[pair_idx].second;
    }
    ++pair_idx;
    dec.pairs.push_back(std::move(pb));
  }
  // Central positions are the non-pivot vertices in ascending order.
  std::vector<bool> is_pivot(dec.m, false);
  for (auto [u, v] : dec.pivot_log) {
    if (u >= dec.m || v >= dec.m) throw std::invalid_argument("pivot index out of range");
    is_pivot[u] = is_pivot[v] = true;
  }
  std::size_t next_central = 0;
  for (const auto& cj : j.at("centrals")) {
    CentralBlock cb;
    cb.beta = monomial_from_json(cj.at("beta"));
    cb.b = cj.at("b").get<int>();
    while (next_central < dec.m && is_pivot[next_central]) ++next_central;
    cb.index = next_central < dec.m ? next_central++ : dec.m;
    dec.centrals.push_back(std::move(cb));
  }
  if (dec.r + 2 * dec.s != dec.m || dec.pairs.size() != dec.s || dec.centrals.size() != dec.r) {
    throw std::invalid_argument("inconsistent decomposition JSON");
  }
  if (spec_out) *spec_out = std::move(spec);
  return dec;
}

json mapping_to_json(const QcaSpec& spec, const QubitMapping& map) {
  json hermitized = json::array();
  for (auto i : map.hermitized) hermitized.push_back(i + 1);
  return json{{"spec", spec_to_json(spec)},
              {"mode", map.independence_mode ? "independent" : "scalar"},
              {"qubits", map.s},
              {"centrals", map.r},
              {"images", paulis_to_json(map.images)},
              {"pivots", pivots_to_json(map.pivots)},
              {"sign_branch", map.sign_branch},
              {"hermitized", hermitized}};
}

QubitMapping mapping_from_json(const json& j, QcaSpec* spec_out) {
  QubitMapping map;
  const std::string mode = j.at("mode").get<std::string>();
  if (mode != "independent" && mode != "scalar") {
    throw std::invalid_argument("mode must be 'independent' or 'scalar'");
  }
  map.independence_mode = mode == "independent";
  map.s = j.at("qubits").get<std::size_t>();
  map.r = j.at("centrals").get<std::size_t>();
  map.images = paulis_from_json(j.at("images"));
  map.m = map.images.size();
  map.pivots = pivots_from_json(j.at("pivots"));
  map.sign_branch = j.at("sign_branch").get<std::vector<int>>();
  for (const auto& h : j.at("hermitized")) {
    const long long idx = h.get<long long>();
    if (idx < 1 || static_cast<std::size_t>(idx) > map.m) {
      throw std::invalid_argument("hermitized index out of range");
    }
    map.hermitized.push_back(static_cast<std::size_t>(idx - 1));
  }
  if (spec_out) *spec_out = spec_from_json(j.at("spec"));
  return map;
}

json stariso_to_json(const StarIsomorphism& iso) {
  json indep = json::array();
  for (auto i : iso.independent) indep.push_back(i + 1);
  json phases = json::array();
  for (auto p : iso.phase_table) phases.push_back(p);
  return json{{"domain", paulis_to_json(iso.domain_gens)},
              {"images", paulis_to_json(iso.images)},
              {"phase_table", phases},
              {"independent", indep},
              {"qubits", iso.s},
              {"centrals", iso.r},
              {"pivots", pivots_to_json(iso.pivots)}};
}

StarIsomorphism stariso_from_json(const json& j) {
  std::vector<PauliString> domain = paulis_from_json(j.at("domain"));
  // Rebuild the extension data; images of dependent inputs are revalidated by
  // the star check rather than trusted from the file.
  StarIsomorphism iso;
  iso.domain_gens = domain;
  iso.images = paulis_from_json(j.at("images"));
  if (iso.images.size() != iso.domain_gens.size()) {
    throw std::invalid_argument("domain and image lists differ in length");
  }
  for (const auto& i : j.at("independent")) {
    const long long idx = i.get<long long>();
    if (idx < 1 || static_cast<std::size_t>(idx) > domain.size()) {
      throw std::invalid_argument("independent index out of range");
    }
    iso.independent.push_back(static_cast<std::size_t>(idx - 1));
  }
  if (j.contains("phase_table")) {
    for (const auto& p : j.at("phase_table")) iso.phase_table.push_back(p.get<unsigned>() & 3u);
  }
  iso.s = j.value("qubits", 0u);
  iso.r = j.value("centrals", 0u);
  std::vector<BitVec> rows;
  for (auto idx : iso.independent) rows.push_back(symplectic_row(domain[idx]));
  iso.independent_rows =
      rows.empty() ? Gf2Matrix(0, 2 * domain.front().num_qubits()) : Gf2Matrix::from_rows(rows);
  return iso;
}

json maxacomm_to_json(const AnticommutingSet& set) {
  return json{{"set", paulis_to_json(set.elements)},
              {"s", set.s},
              {"completion", format_pauli(set.completion)},
              {"source", paulis_to_json(set.source_group_gens)}};
}

AnticommutingSet maxacomm_from_json(const json& j) {
  AnticommutingSet set;
  set.elements = paulis_from_json(j.at("set"));
  set.s = j.at("s").get<std::size_t>();
  set.completion = parse_pauli(j.at("completion").get<std::string>());
  if (j.contains("source")) set.source_group_gens = paulis_from_json(j.at("source"));
  if (set.elements.empty()) throw std::invalid_argument("empty anti-commuting set");
  return set;
}

json blocks_to_json(std::span<const PauliString> images, const BlockCertificate& cert) {
  json coords = json::array();
  for (auto c : cert.diagonal_coords) coords.push_back(c + 1);
  return json{{"images", paulis_to_json(images)},
              {"diagonal_coords", coords},
              {"block_count", cert.block_count},
              {"block_size", cert.block_size}};
}

json report_to_json(const Report& report) {
  json violations = json::array();
  for (const auto& v : report.violations) {
    json idx = json::array();
    for (auto i : v.indices) idx.push_back(i + 1);
    violations.push_back(json{{"kind", violation_kind_name(v.kind)}, {"indices", idx}});
  }
  return json{{"passed", report.passed}, {"violations", violations}};
}

}  // namespace qcmap
