#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <string>
#include <vector>

#include "qcmap/json_io.hpp"
#include "qcmap/maxacomm.hpp"
#include "qcmap/qca.hpp"
#include "qcmap/qubit_map.hpp"
#include "qcmap/verify.hpp"

namespace {

using nlohmann::json;
using namespace qcmap;

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read file: " + path);
  json j;
  in >> j;
  return j;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

// "u,v:u,v" with 1-based indices.
std::vector<std::pair<std::size_t, std::size_t>> parse_pivots(const std::string& text) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find(':', pos);
    if (end == std::string::npos) end = text.size();
    const std::string pair = text.substr(pos, end - pos);
    const std::size_t comma = pair.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("pivot pair needs 'u,v'");
    const long long u = std::stoll(pair.substr(0, comma));
    const long long v = std::stoll(pair.substr(comma + 1));
    if (u < 1 || v < 1) throw std::invalid_argument("pivot indices are 1-based");
    out.emplace_back(static_cast<std::size_t>(u - 1), static_cast<std::size_t>(v - 1));
    pos = end + 1;
  }
  return out;
}

std::vector<int> parse_branch(const std::string& text) {
  std::vector<int> out;
  for (char c : text) {
    if (c == '+') {
      out.push_back(1);
    } else if (c == '-') {
      out.push_back(-1);
    } else {
      throw std::invalid_argument("branch must be a string of '+' and '-'");
    }
  }
  return out;
}

std::vector<PauliString> parse_many(const std::vector<std::string>& texts) {
  std::vector<PauliString> out;
  out.reserve(texts.size());
  for (const auto& t : texts) out.push_back(parse_pauli(t));
  return out;
}

std::uint64_t sampling_seed() {
  if (const char* env = std::getenv("QCMAP_SEED")) {
    return std::strtoull(env, nullptr, 10);
  }
  return 0x5eedULL;
}

int run_certify(const std::string& path, std::size_t word_cap) {
  const json j = load_json(path);
  Report report;
  if (j.contains("images") && j.contains("mode")) {
    QcaSpec spec;
    QubitMapping map = mapping_from_json(j, &spec);
    if (map.num_image_qubits() > 12) {
      std::cerr << "certify: mapping acts on " << map.num_image_qubits()
                << " qubits, above the 12-qubit oracle cap\n";
      return 2;
    }
    // Hermitized images square to -k_i; certify against the adjusted squares.
    QcaSpec effective = spec;
    for (auto i : map.hermitized) effective.k[i] = -effective.k[i];
    report = check_qca_relations(effective, dense_generators(map));
  } else if (j.contains("domain") && j.contains("images")) {
    StarIsomorphism iso = stariso_from_json(j);
    if (iso.domain_gens.front().num_qubits() > 12) {
      std::cerr << "certify: domain acts on more than 12 qubits, above the oracle cap\n";
      return 2;
    }
    report = check_star_isomorphism(iso, word_cap, sampling_seed());
  } else if (j.contains("set")) {
    AnticommutingSet set = maxacomm_from_json(j);
    if (set.elements.front().num_qubits() > 12) {
      std::cerr << "certify: set acts on more than 12 qubits, above the oracle cap\n";
      return 2;
    }
    DenseRep rep = dense_generators(std::span<const PauliString>(set.elements));
    for (std::size_t i = 0; i < set.elements.size(); ++i) {
      for (std::size_t k = i + 1; k < set.elements.size(); ++k) {
        const GaussianMatrix anti = rep.mats[i] * rep.mats[k] + rep.mats[k] * rep.mats[i];
        if (!anti.is_zero()) {
          report.passed = false;
          report.violations.push_back({ViolationKind::Commutation, {i, k}});
        }
      }
    }
    if (set.elements.size() % 2 == 0) {
      report.passed = false;
      report.violations.push_back({ViolationKind::Block, {set.elements.size()}});
    }
  } else if (j.contains("diagonal_coords")) {
    std::vector<PauliString> images;
    for (const auto& s : j.at("images")) images.push_back(parse_pauli(s.get<std::string>()));
    BlockCertificate cert = block_structure(images);
    std::vector<std::size_t> claimed;
    for (const auto& c : j.at("diagonal_coords")) claimed.push_back(c.get<std::size_t>() - 1);
    if (claimed != cert.diagonal_coords || j.at("block_count").get<std::size_t>() != cert.block_count ||
        j.at("block_size").get<std::size_t>() != cert.block_size) {
      report.passed = false;
      report.violations.push_back({ViolationKind::Block, {}});
    }
  } else {
    throw std::invalid_argument("unrecognized input payload");
  }
  emit(report_to_json(report));
  return report.passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Realize prescribed (anti-)commutation structures as Pauli strings"};
  app.require_subcommand(1);

  std::string spec_path, dec_path, pivots_text, branch_text, mode = "scalar";
  std::string certify_path;
  std::size_t jw_modes = 0;
  std::size_t word_cap = 6;
  std::vector<std::string> pauli_args;

  auto* decompose = app.add_subcommand("decompose", "Wedderburn decomposition of a QCA spec");
  decompose->add_option("--spec", spec_path, "QCA spec JSON file")->required();
  decompose->add_option("--pivots", pivots_text, "explicit pivot pairs, e.g. 1,2:3,4");

  auto* map_cmd = app.add_subcommand("map", "qubit realization of a QCA spec");
  map_cmd->add_option("--spec", spec_path, "QCA spec JSON file");
  map_cmd->add_option("--from-decomposition", dec_path, "decomposition JSON file");
  map_cmd->add_option("--pivots", pivots_text, "explicit pivot pairs, e.g. 1,2:3,4");
  map_cmd->add_option("--mode", mode, "scalar or independent")->check(CLI::IsMember({"scalar", "independent"}));
  map_cmd->add_option("--branch", branch_text, "sign per scalar-realized central, e.g. +-");

  auto* pmap = app.add_subcommand("pauli-map", "star-isomorphism onto a reduced Pauli group");
  pmap->add_option("paulis", pauli_args, "generators")->required()->expected(-1);

  auto* jw = app.add_subcommand("jw", "Jordan-Wigner images for N modes");
  jw->add_option("N", jw_modes, "number of modes")->required();

  auto* maxa = app.add_subcommand("maxacomm", "maximal anti-commuting subset of a Pauli group");
  maxa->add_option("paulis", pauli_args, "generators")->required()->expected(-1);

  auto* blocks = app.add_subcommand("blocks", "block-diagonal structure certificate");
  blocks->add_option("paulis", pauli_args, "images")->required()->expected(-1);

  auto* certify = app.add_subcommand("certify", "dense-oracle check of another subcommand's output");
  certify->add_option("input", certify_path, "JSON file produced by another subcommand")->required();
  certify->add_option("--words", word_cap, "word length cap for star checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  }

  try {
    if (decompose->parsed()) {
      QcaSpec spec = spec_from_json(load_json(spec_path));
      PivotPolicy policy = pivots_text.empty()
                               ? PivotPolicy::lowest_pair()
                               : PivotPolicy::explicit_pairs(parse_pivots(pivots_text));
      emit(decomposition_to_json(spec, run_splitting(spec, policy)));
    } else if (map_cmd->parsed()) {
      const bool independence = mode == "independent";
      QcaSpec spec;
      WedderburnDecomposition dec;
      if (!dec_path.empty()) {
        if (!spec_path.empty()) throw std::invalid_argument("--spec and --from-decomposition are exclusive");
        dec = decomposition_from_json(load_json(dec_path), &spec);
      } else if (!spec_path.empty()) {
        spec = spec_from_json(load_json(spec_path));
        PivotPolicy policy = pivots_text.empty()
                                 ? PivotPolicy::lowest_pair()
                                 : PivotPolicy::explicit_pairs(parse_pivots(pivots_text));
        dec = run_splitting(spec, policy);
      } else {
        throw std::invalid_argument("map needs --spec or --from-decomposition");
      }
      std::vector<int> branch = parse_branch(branch_text);
      if (independence && !branch.empty()) {
        throw std::invalid_argument("--branch applies to scalar mode only");
      }
      if (!independence && branch.empty()) branch.assign(dec.r, 1);
      emit(mapping_to_json(spec, mapping_from_decomposition(spec, dec, independence, branch)));
    } else if (pmap->parsed()) {
      std::vector<PauliString> gens = parse_many(pauli_args);
      emit(stariso_to_json(pauli_to_pauli(gens)));
    } else if (jw->parsed()) {
      emit(mapping_to_json(complete_qca_spec(2 * jw_modes), jordan_wigner(jw_modes)));
    } else if (maxa->parsed()) {
      std::vector<PauliString> gens = parse_many(pauli_args);
      emit(maxacomm_to_json(max_anticommuting_set(gens)));
    } else if (blocks->parsed()) {
      std::vector<PauliString> images = parse_many(pauli_args);
      emit(blocks_to_json(images, block_structure(images)));
    } else if (certify->parsed()) {
      return run_certify(certify_path, word_cap);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
