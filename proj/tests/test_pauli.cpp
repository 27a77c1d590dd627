#include <doctest.h>

#include <random>

#include "qcmap/pauli.hpp"
#include "qcmap/verify.hpp"
#include "test_util.hpp"

using namespace qcmap;
using testutil::dense_by_kron;
using testutil::random_pauli;

TEST_CASE("parse_pauli handles prefixes and letters") {
  PauliString p = parse_pauli("IXYZ");
  CHECK(p.phase_pow == 0);
  CHECK(p.num_qubits() == 4);
  CHECK(letter_at(p, 0) == 'I');
  CHECK(letter_at(p, 1) == 'X');
  CHECK(letter_at(p, 2) == 'Y');
  CHECK(letter_at(p, 3) == 'Z');

  CHECK(parse_pauli("-ZXZ").phase_pow == 2);
  CHECK(parse_pauli("iY").phase_pow == 1);
  CHECK(parse_pauli("+iY").phase_pow == 1);
  CHECK(parse_pauli("-iY").phase_pow == 3);
  CHECK(parse_pauli("+X").phase_pow == 0);
}

TEST_CASE("parse_pauli rejects malformed input") {
  CHECK_THROWS_AS(parse_pauli(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_pauli("+"), std::invalid_argument);
  CHECK_THROWS_AS(parse_pauli("-i"), std::invalid_argument);
  CHECK_THROWS_AS(parse_pauli("i"), std::invalid_argument);
  CHECK_THROWS_AS(parse_pauli("XF"), std::invalid_argument);
  CHECK_THROWS_AS(parse_pauli("xyz"), std::invalid_argument);
  CHECK_THROWS_AS(parse_pauli("ii"), std::invalid_argument);
}

TEST_CASE("format_pauli is canonical and round-trips") {
  CHECK(format_pauli(parse_pauli("+iY")) == "iY");
  CHECK(format_pauli(parse_pauli("-iYX")) == "-iYX");
  CHECK(format_pauli(parse_pauli("+XI")) == "XI");
  std::mt19937_64 rng(21);
  for (int iter = 0; iter < 200; ++iter) {
    PauliString p = random_pauli(rng, 1 + rng() % 9);
    CHECK(parse_pauli(format_pauli(p)) == p);
  }
}

TEST_CASE("single-qubit products") {
  CHECK(format_pauli(mul(parse_pauli("X"), parse_pauli("Z"))) == "-iY");
  CHECK(format_pauli(mul(parse_pauli("Z"), parse_pauli("X"))) == "iY");
  CHECK(format_pauli(mul(parse_pauli("X"), parse_pauli("Y"))) == "iZ");
  CHECK(format_pauli(mul(parse_pauli("Y"), parse_pauli("Y"))) == "I");
  CHECK(format_pauli(mul(parse_pauli("XI"), parse_pauli("XX"))) == "IX");
}

TEST_CASE("reduced-basis product reproduces the pentagon composite") {
  // z4 * z3 * z2 * z5 with z5 = i*II collapses to a signed ZY.
  PauliString prod = mul(parse_pauli("IZ"),
                         mul(parse_pauli("IX"), mul(parse_pauli("ZI"), parse_pauli("iII"))));
  CHECK(equal_up_to_phase(prod, parse_pauli("ZY")));
  CHECK(format_pauli(prod) == "-ZY");
}

TEST_CASE("mul rejects mismatched lengths") {
  CHECK_THROWS_AS(mul(parse_pauli("X"), parse_pauli("XX")), std::invalid_argument);
  CHECK_THROWS_AS(anticommutes(parse_pauli("X"), parse_pauli("XX")), std::invalid_argument);
}

TEST_CASE("anticommutes matches the symplectic product") {
  CHECK(anticommutes(parse_pauli("XI"), parse_pauli("ZI")));
  CHECK_FALSE(anticommutes(parse_pauli("XX"), parse_pauli("ZZ")));
  CHECK(anticommutes(parse_pauli("ZY"), parse_pauli("XI")));
}

TEST_CASE("frustration_graph reproduces the pentagon") {
  std::vector<PauliString> gens = {parse_pauli("XI"), parse_pauli("ZI"), parse_pauli("XX"),
                                   parse_pauli("IZ"), parse_pauli("ZY")};
  FrustrationGraph g = frustration_graph(gens);
  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = 0; i < 5; ++i) {
    for (std::size_t j = i + 1; j < 5; ++j) {
      if (g.edge(i, j)) edges.emplace_back(i + 1, j + 1);
    }
  }
  CHECK(edges == std::vector<std::pair<int, int>>{{1, 2}, {1, 5}, {2, 3}, {3, 4}, {4, 5}});
}

TEST_CASE("disjoint supports give an edgeless graph") {
  std::vector<PauliString> gens = {parse_pauli("XI"), parse_pauli("IX")};
  FrustrationGraph g = frustration_graph(gens);
  CHECK_FALSE(g.edge(0, 1));
  CHECK_THROWS_AS(frustration_graph(std::span<const PauliString>{}), std::invalid_argument);
}

TEST_CASE("Jordan-Wigner strings for two modes form a complete graph") {
  std::vector<PauliString> gens = {parse_pauli("XI"), parse_pauli("ZI"), parse_pauli("YX"),
                                   parse_pauli("YZ")};
  FrustrationGraph g = frustration_graph(gens);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      CHECK(g.edge(i, j));
      // Independent route: the dense anti-commutator must vanish exactly.
      GaussianMatrix a = dense_by_kron(gens[i]);
      GaussianMatrix b = dense_by_kron(gens[j]);
      CHECK((a * b + b * a).is_zero());
    }
  }
}

TEST_CASE("mul is associative and matches dense matrix products") {
  std::mt19937_64 rng(22);
  for (int iter = 0; iter < 300; ++iter) {
    const std::size_t n = 1 + rng() % 8;
    PauliString a = random_pauli(rng, n);
    PauliString b = random_pauli(rng, n);
    PauliString c = random_pauli(rng, n);
    CHECK(mul(mul(a, b), c) == mul(a, mul(b, c)));
  }
  for (int iter = 0; iter < 100; ++iter) {
    const std::size_t n = 1 + rng() % 5;
    PauliString a = random_pauli(rng, n);
    PauliString b = random_pauli(rng, n);
    CHECK(dense_by_kron(mul(a, b)) == dense_by_kron(a) * dense_by_kron(b));
  }
}

TEST_CASE("anticommutes is bilinear") {
  std::mt19937_64 rng(23);
  for (int iter = 0; iter < 300; ++iter) {
    const std::size_t n = 1 + rng() % 8;
    PauliString a = random_pauli(rng, n);
    PauliString b = random_pauli(rng, n);
    PauliString c = random_pauli(rng, n);
    CHECK(anticommutes(mul(a, b), c) == (anticommutes(a, c) ^ anticommutes(b, c)));
  }
}

TEST_CASE("every square is plus or minus identity") {
  std::mt19937_64 rng(24);
  for (int iter = 0; iter < 200; ++iter) {
    const std::size_t n = 1 + rng() % 4;
    PauliString a = random_pauli(rng, n);
    PauliString sq = mul(a, a);
    CHECK_FALSE(sq.x.any());
    CHECK_FALSE(sq.z.any());
    CHECK((sq.phase_pow == 0 || sq.phase_pow == 2));
    const int sign = sq.phase_pow == 0 ? 1 : -1;
    CHECK(sign == square_sign(a));
    // Dense confirmation of the sign fixed by the Hermitian letter convention.
    GaussianMatrix expect = GaussianMatrix::scalar(std::size_t{1} << n, {sign, 0});
    CHECK(dense_by_kron(a) * dense_by_kron(a) == expect);
  }
}

TEST_CASE("adjoint conjugates the phase and matches dense conjugate transpose") {
  std::mt19937_64 rng(25);
  for (int iter = 0; iter < 100; ++iter) {
    const std::size_t n = 1 + rng() % 4;
    PauliString a = random_pauli(rng, n);
    CHECK(dense_by_kron(adjoint(a)) == dense_by_kron(a).adjoint());
    CHECK(mul(a, adjoint(a)) == identity_string(n));
  }
}

TEST_CASE("long strings stay exact") {
  std::string body(1000, 'I');
  body[0] = 'X';
  body[999] = 'Y';
  PauliString a = parse_pauli(body);
  std::string other(1000, 'I');
  other[0] = 'Z';
  other[999] = 'Y';
  PauliString b = parse_pauli(other);
  CHECK(anticommutes(a, b));
  CHECK(format_pauli(mul(a, a)) == std::string(1000, 'I'));
  CHECK(parse_pauli(format_pauli(mul(a, b))) == mul(a, b));
}

TEST_CASE("hermiticity is evenness of the phase power") {
  CHECK(parse_pauli("Y").is_hermitian());
  CHECK(parse_pauli("-ZXZ").is_hermitian());
  CHECK_FALSE(parse_pauli("iY").is_hermitian());
  CHECK(equal_up_to_phase(parse_pauli("-ZY"), parse_pauli("ZY")));
  CHECK_FALSE(equal_up_to_phase(parse_pauli("ZY"), parse_pauli("YZ")));
}
