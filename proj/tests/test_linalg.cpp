#include <doctest.h>

#include <cmath>
#include <random>

#include "paulipf/complex_matrix.hpp"

using namespace paulipf;

namespace {

const ComplexScalar I{0.0, 1.0};

CMatrix px() { return CMatrix::from_rows({{0, 1}, {1, 0}}); }
CMatrix py() { return CMatrix::from_rows({{0, -I}, {I, 0}}); }
CMatrix pz() { return CMatrix::from_rows({{1, 0}, {0, -1}}); }

CMatrix random_matrix(std::mt19937_64& rng, int n) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  CMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = ComplexScalar(u(rng), u(rng));
  return m;
}

}  // namespace

TEST_CASE("kron: identity, Pauli lifts, frozen entries") {
  const CMatrix i2 = CMatrix::identity(2);
  CHECK(approx_equal(kron(i2, i2), CMatrix::identity(4)));

  // X (x) I has ones at (0,2),(1,3),(2,0),(3,1).
  const CMatrix xi = kron(px(), i2);
  CHECK(xi(0, 2) == ComplexScalar(1.0));
  CHECK(xi(1, 3) == ComplexScalar(1.0));
  CHECK(xi(2, 0) == ComplexScalar(1.0));
  CHECK(xi(3, 1) == ComplexScalar(1.0));
  CHECK(xi.frobenius_norm() == doctest::Approx(2.0));

  // Y (x) Z by direct block expansion.
  const CMatrix yz = kron(py(), pz());
  CHECK(yz(0, 2) == -I);
  CHECK(yz(1, 3) == I);
  CHECK(yz(2, 0) == I);
  CHECK(yz(3, 1) == -I);

  CHECK_THROWS_AS(kron(CMatrix::identity(4), CMatrix::identity(4)),
                  DimensionOverflow);
}

TEST_CASE("kron is associative and satisfies the mixed-product rule") {
  std::mt19937_64 rng(11);
  const CMatrix i2 = CMatrix::identity(2);
  for (int trial = 0; trial < 50; ++trial) {
    const CMatrix a = random_matrix(rng, 2);
    const CMatrix b = random_matrix(rng, 2);
    CHECK(max_abs_diff(kron(a, i2) * kron(i2, b), kron(a, b)) <= 1e-14);
    CHECK(max_abs_diff(kron(i2, b) * kron(a, i2), kron(a, b)) <= 1e-14);
  }
  // Associativity, with a 2x1 factor to stay inside the 8x8 cap.
  const CMatrix a = random_matrix(rng, 2);
  const CMatrix b = random_matrix(rng, 2);
  CMatrix c(2, 1);
  c(0, 0) = 0.5;
  c(1, 0) = -I;
  CHECK(max_abs_diff(kron(kron(a, b), c), kron(a, kron(b, c))) <= 1e-14);
}

TEST_CASE("commutator and anticommutator") {
  const CMatrix x = px(), y = py(), z = pz();
  CHECK(commutator(x, x).max_abs() == 0.0);
  CHECK(approx_equal(commutator(x, y), z * (2.0 * I)));
  CHECK(approx_equal(anticommutator(x, x), CMatrix::identity(2) * 2.0));
  const CMatrix a = CMatrix::from_rows({{1, 2}, {3, ComplexScalar(0, 4)}});
  CHECK(approx_equal(anticommutator(CMatrix::identity(2), a), a * 2.0));

  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 30; ++trial) {
    const CMatrix p = random_matrix(rng, 4);
    const CMatrix q = random_matrix(rng, 4);
    CHECK((commutator(p, q) + commutator(q, p)).max_abs() <= 1e-14);
    CHECK(max_abs_diff(anticommutator(p, q), anticommutator(q, p)) <= 1e-14);
  }
  CHECK_THROWS_AS(commutator(px(), CMatrix::identity(4)), DimensionMismatch);
}

TEST_CASE("mat_exp: zero matrix, diagonal closed form") {
  CHECK(approx_equal(mat_exp(CMatrix(3, 3), 1.0), CMatrix::identity(3)));

  CMatrix d(4, 4);
  d(0, 0) = 1.0;
  d(1, 1) = -1.0;
  d(2, 2) = 0.0;
  d(3, 3) = 2.0;
  const CMatrix e = mat_exp(d, 1.0);
  CHECK(std::abs(e(0, 0) - std::exp(1.0)) <= 1e-13 * std::exp(1.0));
  CHECK(std::abs(e(1, 1) - std::exp(-1.0)) <= 1e-13);
  CHECK(std::abs(e(2, 2) - 1.0) <= 1e-14);
  CHECK(std::abs(e(3, 3) - std::exp(2.0)) <= 1e-13 * std::exp(2.0));
  CHECK(e(0, 1) == ComplexScalar(0.0));
}

TEST_CASE("mat_exp: oscillator rotation by pi flips the charge sign") {
  // Q1'' = -Q1 gives Q1(t) = cos t; at t = pi the state (1,0,0,0) maps to
  // (-1,0,0,0).
  const CMatrix l = CMatrix::from_rows(
      {{0, 0, 1, 0}, {0, 0, 0, 1}, {-1, 0, 0, 0}, {0, -1, 0, 0}});
  const CVector psi0{1.0, 0.0, 0.0, 0.0};
  const CVector out = mat_exp(l, M_PI) * psi0;
  CHECK(max_abs_diff(out, CVector{-1.0, 0.0, 0.0, 0.0}) <= 1e-9);
}

TEST_CASE("mat_exp: semigroup and halving properties") {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 25; ++trial) {
    const CMatrix a = random_matrix(rng, 4);
    const double cap = 10.0 / a.inf_norm();
    const double s = u(rng) * cap / 2.0;
    const double t = u(rng) * cap / 2.0;
    CHECK(max_abs_diff(mat_exp(a, s) * mat_exp(a, t), mat_exp(a, s + t)) <=
          1e-9);
    CHECK(max_abs_diff(mat_exp(a, t / 2) * mat_exp(a, t / 2), mat_exp(a, t)) <=
          1e-10);
  }
}

TEST_CASE("mat_exp overflows loudly instead of returning inf") {
  CMatrix d(2, 2);
  d(0, 0) = 1000.0;
  d(1, 1) = 1000.0;
  CHECK_THROWS_AS(mat_exp(d, 1.0), OverflowError);
}

TEST_CASE("span_decompose: basis member, mixture, and orthogonal target") {
  std::vector<CMatrix> basis;
  const CMatrix i2 = CMatrix::identity(2);
  basis.push_back(kron(px(), i2));
  basis.push_back(kron(py(), i2));
  basis.push_back(kron(pz(), pz()));

  SUBCASE("picking out a basis member") {
    const SpanDecomposition d = span_decompose(basis, basis[1]);
    CHECK(std::abs(d.coefficients[0]) <= 1e-13);
    CHECK(std::abs(d.coefficients[1] - ComplexScalar(1.0)) <= 1e-13);
    CHECK(std::abs(d.coefficients[2]) <= 1e-13);
    CHECK(d.residual <= 1e-13);
  }
  SUBCASE("complex mixture") {
    const CMatrix target = basis[0] * ComplexScalar(0.5, -2.0) +
                           basis[2] * ComplexScalar(0.0, 3.0);
    const SpanDecomposition d = span_decompose(basis, target);
    CHECK(std::abs(d.coefficients[0] - ComplexScalar(0.5, -2.0)) <= 1e-12);
    CHECK(std::abs(d.coefficients[2] - ComplexScalar(0.0, 3.0)) <= 1e-12);
    CHECK(d.residual <= 1e-12);
  }
  SUBCASE("identity is orthogonal to traceless words") {
    const SpanDecomposition d = span_decompose(basis, CMatrix::identity(4));
    CHECK(d.residual > 0.5);
  }
  SUBCASE("reported residual equals the reconstruction residual") {
    std::mt19937_64 rng(14);
    for (int trial = 0; trial < 20; ++trial) {
      const CMatrix target = random_matrix(rng, 4);
      const SpanDecomposition d = span_decompose(basis, target);
      CMatrix recon(4, 4);
      for (size_t k = 0; k < basis.size(); ++k)
        recon = recon + basis[k] * d.coefficients[k];
      CHECK(std::abs((recon - target).frobenius_norm() - d.residual) <= 1e-12);
    }
  }
  CHECK_THROWS_AS(span_decompose(basis, CMatrix::identity(2)),
                  DimensionMismatch);
  CHECK_THROWS_AS(span_decompose({}, CMatrix::identity(2)),
                  DimensionMismatch);
}

TEST_CASE("hermitian_eigen reconstructs the matrix") {
  std::mt19937_64 rng(15);
  for (int n : {2, 3, 4, 6, 8}) {
    const CMatrix g = random_matrix(rng, n);
    const CMatrix h = (g + g.adjoint()) * ComplexScalar(0.5);
    const HermitianEigen eig = hermitian_eigen(h);
    CMatrix d(n, n);
    for (int i = 0; i < n; ++i) d(i, i) = eig.values[i];
    CHECK(max_abs_diff(eig.vectors * d * eig.vectors.adjoint(), h) <= 1e-12);
    CHECK(max_abs_diff(eig.vectors.adjoint() * eig.vectors,
                       CMatrix::identity(n)) <= 1e-12);
    for (int i = 1; i < n; ++i) CHECK(eig.values[i - 1] <= eig.values[i]);
  }
}

TEST_CASE("psd_sqrt: scalars, closed form, spectral path") {
  CHECK(approx_equal(psd_sqrt(CMatrix::identity(2)), CMatrix::identity(2)));
  CHECK(approx_equal(psd_sqrt(CMatrix::identity(2) * 4.0),
                     CMatrix::identity(2) * 2.0));

  std::mt19937_64 rng(16);
  for (int n : {2, 4}) {
    for (int trial = 0; trial < 20; ++trial) {
      const CMatrix g = random_matrix(rng, n);
      const CMatrix s = g.adjoint() * g + CMatrix::identity(n) * 0.3;
      const CMatrix t = psd_sqrt(s);
      CHECK(max_abs_diff(t, t.adjoint()) <= 1e-12);
      CHECK(max_abs_diff(t * t, s) <= 1e-10);
    }
  }

  CHECK_THROWS_AS(psd_sqrt(px() * I), NotHermitian);
  CHECK_THROWS_AS(psd_sqrt(pz()), NotPositiveDefinite);  // eigenvalue -1
  CMatrix tiny(2, 2);
  tiny(0, 0) = 1.0;
  tiny(1, 1) = 1e-15;
  CHECK_THROWS_AS(psd_sqrt(tiny), NotPositiveDefinite);
}

TEST_CASE("inverse and eigenvalues_2x2") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    const CMatrix a = random_matrix(rng, 4) + CMatrix::identity(4) * 2.0;
    CHECK(max_abs_diff(a * inverse(a), CMatrix::identity(4)) <= 1e-12);
  }
  const auto eig = eigenvalues_2x2(pz());
  CHECK(std::abs(eig[0] - ComplexScalar(-1.0)) <= 1e-14);
  CHECK(std::abs(eig[1] - ComplexScalar(1.0)) <= 1e-14);
}

TEST_CASE("stored matrices reject non-finite entries") {
  CHECK_THROWS_AS(CMatrix::from_rows({{std::nan(""), 0}, {0, 1}}),
                  OverflowError);
  CHECK(CMatrix::identity(2).all_finite());
}

TEST_CASE("entrywise equality uses the 1e-12 default tolerance") {
  CMatrix a = CMatrix::identity(2);
  CMatrix b = a;
  b(0, 1) = 1e-13;
  CHECK(approx_equal(a, b));
  b(0, 1) = 1e-11;
  CHECK(!approx_equal(a, b));
  CHECK(approx_equal(a, b, 1e-10));
}

TEST_CASE("inner product is antilinear in the first slot") {
  const CVector u{I, 1.0};
  const CVector v{1.0, 0.0};
  CHECK(std::abs(inner(u, v) - (-I)) <= 1e-15);
  CHECK(std::abs(inner(u * I, v) - (-I) * (-I)) <= 1e-15);
  CHECK(std::abs(inner(u, v * I) - (-I) * I) <= 1e-15);
}
