#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>

using nlohmann::json;

namespace {

struct RunResult {
  int exit_code;
  std::string output;
};

// Runs the CLI binary with stdout captured; stderr is left visible.
RunResult run_cli(const std::string& args) {
  const std::string out_path = "cli_test_stdout.tmp";
  const std::string cmd = std::string(QCMAP_CLI_PATH) + " " + args + " > " + out_path;
  const int status = std::system(cmd.c_str());
  std::ifstream in(out_path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  std::remove(out_path.c_str());
  int code = -1;
#ifdef WEXITSTATUS
  if (status != -1) code = WEXITSTATUS(status);
#else
  code = status;
#endif
  return {code, buffer.str()};
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  out << content;
}

const char* kPentagonSpec =
    R"({"m":5,"edges":[[1,2],[2,3],[3,4],[4,5],[1,5]],"k":[1,1,1,1,1]})";

}  // namespace

TEST_CASE("cli map reproduces the pentagon realization") {
  write_file("pentagon.json", kPentagonSpec);
  RunResult r = run_cli("map --spec pentagon.json --pivots 1,2:3,4 --mode scalar --branch=+");
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.output);
  CHECK(j.at("images") == json::array({"XI", "ZI", "XX", "IZ", "-ZY"}));
  CHECK(j.at("mode") == "scalar");

  RunResult indep = run_cli("map --spec pentagon.json --pivots 1,2:3,4 --mode independent");
  json ji = json::parse(indep.output);
  CHECK(ji.at("images") == json::array({"IXI", "IZI", "IXX", "IIZ", "-ZZY"}));
  std::remove("pentagon.json");
}

TEST_CASE("cli decompose then map matches direct map byte for byte") {
  write_file("pentagon.json", kPentagonSpec);
  RunResult dec = run_cli("decompose --spec pentagon.json --pivots 1,2:3,4");
  REQUIRE(dec.exit_code == 0);
  write_file("dec.json", dec.output);
  RunResult from_dec = run_cli("map --from-decomposition dec.json --mode scalar --branch=+");
  RunResult direct = run_cli("map --spec pentagon.json --pivots 1,2:3,4 --mode scalar --branch=+");
  REQUIRE(from_dec.exit_code == 0);
  REQUIRE(direct.exit_code == 0);
  CHECK(from_dec.output == direct.output);
  std::remove("pentagon.json");
  std::remove("dec.json");
}

TEST_CASE("cli map picks lowest-pair pivots when none are given") {
  write_file("pentagon.json", kPentagonSpec);
  RunResult with_pivots =
      run_cli("map --spec pentagon.json --pivots 1,2:3,4 --mode scalar --branch=+");
  RunResult without = run_cli("map --spec pentagon.json --mode scalar --branch=+");
  REQUIRE(without.exit_code == 0);
  CHECK(without.output == with_pivots.output);
  std::remove("pentagon.json");
}

TEST_CASE("cli certify honors the word cap flag") {
  RunResult iso = run_cli("pauli-map XZI ZXI XIZ ZIX IXZ IZX");
  REQUIRE(iso.exit_code == 0);
  write_file("iso_words.json", iso.output);
  CHECK(run_cli("certify iso_words.json --words 4").exit_code == 0);
  std::remove("iso_words.json");
}

TEST_CASE("cli jw emits chain images up to signs") {
  RunResult r = run_cli("jw 2");
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.output);
  const auto images = j.at("images").get<std::vector<std::string>>();
  REQUIRE(images.size() == 4);
  auto letters = [](std::string s) {
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) s.erase(0, 1);
    if (!s.empty() && s[0] == 'i') s.erase(0, 1);
    return s;
  };
  CHECK(letters(images[0]) == "XI");
  CHECK(letters(images[1]) == "ZI");
  CHECK(letters(images[2]) == "YX");
  CHECK(letters(images[3]) == "YZ");
}

TEST_CASE("cli maxacomm reproduces the worked example") {
  RunResult r = run_cli("maxacomm XXI XIX ZZI ZIZ");
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.output);
  CHECK(j.at("s") == 2);
  CHECK(j.at("set").size() == 5);
}

TEST_CASE("cli blocks and certify") {
  RunResult blocks = run_cli("blocks IXI IIX IIZ IZI ZYI");
  REQUIRE(blocks.exit_code == 0);
  json bj = json::parse(blocks.output);
  CHECK(bj.at("diagonal_coords") == json::array({1}));
  write_file("blocks.json", blocks.output);
  RunResult certify = run_cli("certify blocks.json");
  CHECK(certify.exit_code == 0);
  std::remove("blocks.json");
}

TEST_CASE("cli certify accepts sound mappings and flags corrupted ones") {
  write_file("pentagon.json", kPentagonSpec);
  RunResult map = run_cli("map --spec pentagon.json --pivots 1,2:3,4 --mode scalar --branch=+");
  REQUIRE(map.exit_code == 0);
  write_file("map.json", map.output);
  RunResult ok = run_cli("certify map.json");
  CHECK(ok.exit_code == 0);
  CHECK(json::parse(ok.output).at("passed") == true);

  json corrupted = json::parse(map.output);
  corrupted["images"][2] = "XZ";  // breaks the prescribed commutation pattern
  write_file("bad.json", corrupted.dump(2) + "\n");
  RunResult bad = run_cli("certify bad.json");
  CHECK(bad.exit_code == 1);
  CHECK(json::parse(bad.output).at("passed") == false);
  std::remove("pentagon.json");
  std::remove("map.json");
  std::remove("bad.json");
}

TEST_CASE("cli certify refuses mappings above the oracle cap") {
  RunResult jw = run_cli("jw 13");
  REQUIRE(jw.exit_code == 0);
  write_file("jw13.json", jw.output);
  RunResult certify = run_cli("certify jw13.json 2> cap_err.tmp");
  CHECK(certify.exit_code == 2);
  std::remove("jw13.json");
  std::remove("cap_err.tmp");
}

TEST_CASE("cli reports input errors with exit code 2") {
  CHECK(run_cli("map --spec missing.json 2> err.tmp").exit_code == 2);
  CHECK(run_cli("bogus-subcommand 2> err.tmp").exit_code == 2);
  CHECK(run_cli("maxacomm XQ 2> err.tmp").exit_code == 2);
  CHECK(run_cli("map 2> err.tmp").exit_code == 2);
  write_file("pentagon.json", kPentagonSpec);
  CHECK(run_cli("map --spec pentagon.json --mode independent --branch=+ 2> err.tmp").exit_code == 2);
  CHECK(run_cli("map --spec pentagon.json --mode scalar --branch=++ 2> err.tmp").exit_code == 2);
  std::remove("pentagon.json");
  std::remove("err.tmp");
}

TEST_CASE("cli pauli-map output is deterministic and certifiable") {
  RunResult a = run_cli("pauli-map XZI ZXI XIZ ZIX IXZ IZX");
  RunResult b = run_cli("pauli-map XZI ZXI XIZ ZIX IXZ IZX");
  REQUIRE(a.exit_code == 0);
  CHECK(a.output == b.output);
  write_file("iso.json", a.output);
  RunResult certify = run_cli("certify iso.json");
  CHECK(certify.exit_code == 0);

  // Seeded sampling keeps certify byte-deterministic as well.
  RunResult c1 = run_cli("certify iso.json");
  RunResult c2 = run_cli("certify iso.json");
  CHECK(c1.output == c2.output);
  const std::string seeded = "QCMAP_SEED=7 " + std::string(QCMAP_CLI_PATH) +
                             " certify iso.json > seeded.tmp";
  REQUIRE(std::system(seeded.c_str()) == 0);
  REQUIRE(std::system(seeded.c_str()) == 0);
  std::remove("seeded.tmp");
  std::remove("iso.json");
}

TEST_CASE("cli certify validates maxacomm output") {
  RunResult maxa = run_cli("maxacomm XXI XIX ZZI ZIZ");
  REQUIRE(maxa.exit_code == 0);
  write_file("set.json", maxa.output);
  CHECK(run_cli("certify set.json").exit_code == 0);

  json broken = json::parse(maxa.output);
  broken["set"][1] = "III";
  write_file("broken_set.json", broken.dump(2) + "\n");
  CHECK(run_cli("certify broken_set.json").exit_code == 1);
  std::remove("set.json");
  std::remove("broken_set.json");
}
