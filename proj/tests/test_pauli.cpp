#include <doctest.h>

#include <algorithm>
#include <random>
#include <sstream>

#include "paulipf/pauli.hpp"

using namespace paulipf;

namespace {
using L = PauliLetter;
const ComplexScalar I{0.0, 1.0};

PauliElement p1(L l, int phase = 0) { return PauliElement::single(l, phase); }
PauliElement p2(L a, L b, int phase = 0) {
  return PauliElement::two(a, b, phase);
}
}  // namespace

TEST_CASE("letterwise products carry the right phases") {
  // ZY = -iX (rearranging X = iZY), and every letter squares to I.
  CHECK(pauli_mul(p1(L::Z), p1(L::Y)) == p1(L::X, 3));
  CHECK(pauli_mul(p1(L::X), p1(L::X)) == p1(L::I));
  CHECK(pauli_mul(p1(L::X), p1(L::Y)) == p1(L::Z, 1));
  CHECK(pauli_mul(p1(L::Y), p1(L::X)) == p1(L::Z, 3));

  // i(I(x)X) times -(I(x)X) = -i (I(x)I).
  CHECK(pauli_mul(p2(L::I, L::X, 1), p2(L::I, L::X, 2)) == p2(L::I, L::I, 3));

  CHECK_THROWS_AS(pauli_mul(p1(L::X), p2(L::X, L::I)), QubitMismatch);
}

TEST_CASE("letter multiplication table agrees with the matrices") {
  const L letters[4] = {L::I, L::X, L::Y, L::Z};
  for (L a : letters)
    for (L b : letters) {
      const PauliElement prod = pauli_mul(p1(a), p1(b));
      CHECK(to_matrix_exact(prod) ==
            to_matrix_exact(p1(a)) * to_matrix_exact(p1(b)));
    }
}

TEST_CASE("to_matrix: displayed matrices and phases") {
  const CMatrix y = to_matrix(p1(L::Y));
  CHECK(y(0, 0) == ComplexScalar(0.0));
  CHECK(y(0, 1) == -I);
  CHECK(y(1, 0) == I);

  CHECK(approx_equal(to_matrix(p2(L::I, L::I)), CMatrix::identity(4)));

  // i (I (x) Y) places the real rotation block [[0,1],[-1,0]] on the
  // diagonal.
  const CMatrix x6 = to_matrix(p2(L::I, L::Y, 1));
  CHECK(x6(0, 1) == ComplexScalar(1.0));
  CHECK(x6(1, 0) == ComplexScalar(-1.0));
  CHECK(x6(2, 3) == ComplexScalar(1.0));
  CHECK(x6(3, 2) == ComplexScalar(-1.0));
}

TEST_CASE("from_matrix recognizes words and rejects non-words") {
  CHECK(from_matrix(CMatrix::identity(4)) == p2(L::I, L::I));

  // diag(1,-1,-1,1) is Z (x) Z.
  CMatrix zz(4, 4);
  zz(0, 0) = 1;
  zz(1, 1) = -1;
  zz(2, 2) = -1;
  zz(3, 3) = 1;
  CHECK(from_matrix(zz) == p2(L::Z, L::Z));

  // A generator with a gain entry matches no word.
  const CMatrix ls = CMatrix::from_rows(
      {{0, 0, 1, 0}, {0, 0, 0, 1}, {-1, 1, 1, 0}, {1, -1, 0, -1}});
  CHECK_THROWS_AS(from_matrix(ls), NotPauli);
  CHECK_THROWS_AS(from_matrix(CMatrix::identity(3)), NotPauli);
}

TEST_CASE("from_matrix inverts to_matrix on all 64 two-qubit elements") {
  const FiniteMatrixGroup g = generate_group(
      {p2(L::X, L::I), p2(L::Y, L::I), p2(L::Z, L::I), p2(L::I, L::X),
       p2(L::I, L::Y), p2(L::I, L::Z)});
  REQUIRE(g.order() == 64);
  for (const auto& e : g.elements()) CHECK(from_matrix(to_matrix(e)) == e);
}

TEST_CASE("group closure: orders 16, 1 and 64") {
  CHECK(generate_group({p1(L::X), p1(L::Y), p1(L::Z)}).order() == 16);
  CHECK(generate_group({PauliElement::identity(2)}).order() == 1);
  CHECK(generate_group({p2(L::X, L::I), p2(L::Y, L::I), p2(L::Z, L::I),
                        p2(L::I, L::X), p2(L::I, L::Y), p2(L::I, L::Z)})
            .order() == 64);
  CHECK_THROWS_AS(generate_group({}), QubitMismatch);
  CHECK_THROWS_AS(generate_group({p1(L::X), p2(L::X, L::I)}), QubitMismatch);
}

TEST_CASE("closure does not depend on generator order") {
  std::vector<PauliElement> gens = {p2(L::X, L::I), p2(L::Y, L::I),
                                    p2(L::Z, L::I), p2(L::I, L::X),
                                    p2(L::I, L::Y), p2(L::I, L::Z)};
  const FiniteMatrixGroup ref = generate_group(gens);
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 10; ++trial) {
    std::shuffle(gens.begin(), gens.end(), rng);
    CHECK(generate_group(gens).same_elements(ref));
  }
}

TEST_CASE("every two-qubit element has order dividing 4; center is the "
          "phase line") {
  const FiniteMatrixGroup g = generate_group(
      {p2(L::X, L::I), p2(L::Y, L::I), p2(L::Z, L::I), p2(L::I, L::X),
       p2(L::I, L::Y), p2(L::I, L::Z)});
  int center = 0;
  for (const auto& e : g.elements()) {
    const PauliElement e2 = pauli_mul(e, e);
    CHECK(pauli_mul(e2, e2).is_identity());
    CHECK(pauli_mul(e, pauli_inverse(e)).is_identity());
    bool central = true;
    for (const auto& f : g.elements())
      if (pauli_mul(e, f) != pauli_mul(f, e)) central = false;
    if (central) {
      ++center;
      CHECK(e.word[0] == L::I);
      CHECK(e.word[1] == L::I);
    }
  }
  CHECK(center == 4);
}

TEST_CASE("central product: trivial factor, failing pair") {
  const FiniteMatrixGroup full =
      generate_group({p1(L::X), p1(L::Y), p1(L::Z)});
  const FiniteMatrixGroup one = generate_group({PauliElement::identity(1)});
  CHECK(is_central_product(full, full, one).ok);

  const FiniteMatrixGroup gx = generate_group({p1(L::X)});
  const FiniteMatrixGroup gy = generate_group({p1(L::Y)});
  const CentralProductCheck bad = is_central_product(full, gx, gy);
  CHECK(!bad.ok);
  REQUIRE(bad.witness.has_value());
  CHECK(bad.witness->first == p1(L::X));
  CHECK(bad.witness->second == p1(L::Y));

  CHECK_THROWS_AS(is_central_product(gx, full, one), NotSubgroup);
}

TEST_CASE("central product detects a covering failure") {
  // U = V = <Z> inside <X,Y,Z>: everything commutes but the products only
  // reach the abelian corner.
  const FiniteMatrixGroup full =
      generate_group({p1(L::X), p1(L::Y), p1(L::Z)});
  const FiniteMatrixGroup gz = generate_group({p1(L::Z)});
  const CentralProductCheck res = is_central_product(full, gz, gz);
  CHECK(!res.ok);
  CHECK(res.missing.has_value());
}

TEST_CASE("element formatting and parsing round-trip") {
  CHECK(parse_pauli("-iYX") == p2(L::Y, L::X, 3));
  CHECK(parse_pauli("Z") == p1(L::Z));
  CHECK(parse_pauli("+iI") == p1(L::I, 1));
  CHECK(p2(L::Y, L::X, 3).to_string() == "-iYX");

  const FiniteMatrixGroup g = generate_group(
      {p2(L::X, L::I), p2(L::Y, L::I), p2(L::Z, L::I), p2(L::I, L::X),
       p2(L::I, L::Y), p2(L::I, L::Z)});
  for (const auto& e : g.elements()) CHECK(parse_pauli(e.to_string()) == e);

  CHECK_THROWS_AS(parse_pauli(""), ParseError);
  CHECK_THROWS_AS(parse_pauli("Q"), ParseError);
  CHECK_THROWS_AS(parse_pauli("XYZ"), ParseError);
}

TEST_CASE("generator files: one element per line") {
  std::istringstream in("  X \n\n-iYX\nZZ\n");
  const auto gens = read_generator_file(in);
  REQUIRE(gens.size() == 3);
  CHECK(gens[0] == p1(L::X));
  CHECK(gens[1] == p2(L::Y, L::X, 3));
  CHECK(gens[2] == p2(L::Z, L::Z));

  std::istringstream bad("X\nW\n");
  CHECK_THROWS_WITH_AS(static_cast<void>(read_generator_file(bad)),
                       doctest::Contains("line 2"), ParseError);
}
