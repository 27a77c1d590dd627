#include <doctest.h>

#include <json.hpp>

#include "qcmap/json_io.hpp"
#include "test_util.hpp"

using namespace qcmap;
using nlohmann::json;

namespace {

json pentagon_json() {
  return json::parse(R"({"m":5,"edges":[[1,2],[2,3],[3,4],[4,5],[1,5]],"k":[1,1,1,1,1]})");
}

}  // namespace

TEST_CASE("spec JSON round-trips") {
  QcaSpec spec = spec_from_json(pentagon_json());
  CHECK(spec.m == 5);
  CHECK(spec.chi_bit(0, 1));
  CHECK(spec.chi_bit(4, 0));
  CHECK_FALSE(spec.chi_bit(0, 2));
  QcaSpec again = spec_from_json(spec_to_json(spec));
  CHECK(again.chi == spec.chi);
  CHECK(again.k == spec.k);
}

TEST_CASE("spec JSON validation") {
  CHECK_THROWS_AS(spec_from_json(json::parse(R"({"m":0,"edges":[],"k":[]})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(spec_from_json(json::parse(R"({"m":2,"edges":[[1,3]],"k":[1,1]})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(spec_from_json(json::parse(R"({"m":2,"edges":[[1,1]],"k":[1,1]})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(spec_from_json(json::parse(R"({"m":2,"edges":[],"k":[1,2]})")),
                  std::invalid_argument);
}

TEST_CASE("decomposition JSON round-trips through the mapping path") {
  QcaSpec spec = spec_from_json(pentagon_json());
  WedderburnDecomposition dec =
      run_splitting(spec, PivotPolicy::explicit_pairs({{0, 1}, {2, 3}}));
  json j = decomposition_to_json(spec, dec);
  CHECK(j.at("r") == 1);
  CHECK(j.at("s") == 2);
  CHECK(j.at("centrals").at(0).at("beta").at("e") == "11111");
  CHECK(j.at("centrals").at(0).at("b") == -1);

  QcaSpec spec2;
  WedderburnDecomposition dec2 = decomposition_from_json(j, &spec2);
  CHECK(dec2.T == dec.T);
  CHECK(dec2.pivot_log == dec.pivot_log);
  REQUIRE(dec2.centrals.size() == 1);
  CHECK(dec2.centrals[0].index == dec.centrals[0].index);
  const int plus[] = {1};
  QubitMapping direct = mapping_from_decomposition(spec, dec, false, plus);
  QubitMapping loaded = mapping_from_decomposition(spec2, dec2, false, plus);
  CHECK(direct.images == loaded.images);
}

TEST_CASE("mapping JSON carries the declared schema fields") {
  QcaSpec spec = spec_from_json(pentagon_json());
  const int plus[] = {1};
  QubitMapping map =
      qca_to_qubits(spec, PivotPolicy::explicit_pairs({{0, 1}, {2, 3}}), false, plus);
  json j = mapping_to_json(spec, map);
  CHECK(j.at("mode") == "scalar");
  CHECK(j.at("qubits") == 2);
  CHECK(j.at("centrals") == 1);
  CHECK(j.at("images") == json::array({"XI", "ZI", "XX", "IZ", "-ZY"}));
  CHECK(j.at("pivots") == json::parse("[[1,2],[3,4]]"));
  CHECK(j.at("sign_branch") == json::array({1}));
  CHECK(j.at("hermitized") == json::array());

  QcaSpec spec2;
  QubitMapping loaded = mapping_from_json(j, &spec2);
  CHECK(loaded.images == map.images);
  CHECK(loaded.s == map.s);
  CHECK(loaded.r == map.r);
  CHECK(spec2.chi == spec.chi);
}

TEST_CASE("star-isomorphism JSON reconstructs the extension data") {
  std::vector<PauliString> gens = {parse_pauli("XZI"), parse_pauli("ZXI"), parse_pauli("XIZ"),
                                   parse_pauli("ZIX"), parse_pauli("IXZ"), parse_pauli("IZX")};
  StarIsomorphism iso = pauli_to_pauli(gens);
  json j = stariso_to_json(iso);
  CHECK(j.at("independent") == json::array({1, 2, 3, 4, 5}));
  StarIsomorphism loaded = stariso_from_json(j);
  CHECK(loaded.images == iso.images);
  CHECK(loaded.map_element(parse_pauli("IYY")) == iso.map_element(parse_pauli("IYY")));
}

TEST_CASE("maxacomm and report JSON") {
  std::vector<PauliString> gens = {parse_pauli("XXI"), parse_pauli("XIX"), parse_pauli("ZZI"),
                                   parse_pauli("ZIZ")};
  AnticommutingSet set = max_anticommuting_set(gens);
  json j = maxacomm_to_json(set);
  CHECK(j.at("s") == 2);
  CHECK(j.at("set").size() == 5);
  CHECK(j.at("completion") == format_pauli(set.completion));
  AnticommutingSet loaded = maxacomm_from_json(j);
  CHECK(loaded.elements == set.elements);

  Report report;
  report.passed = false;
  report.violations.push_back({ViolationKind::Square, {2}});
  json rj = report_to_json(report);
  CHECK(rj.at("passed") == false);
  CHECK(rj.at("violations").at(0).at("kind") == "square");
  CHECK(rj.at("violations").at(0).at("indices") == json::array({3}));
}

TEST_CASE("blocks JSON uses 1-based coordinates") {
  std::vector<PauliString> images = {parse_pauli("IXI"), parse_pauli("ZYI")};
  json j = blocks_to_json(images, block_structure(images));
  CHECK(j.at("diagonal_coords") == json::array({1, 3}));
  CHECK(j.at("block_count") == 4);
  CHECK(j.at("block_size") == 2);
}
