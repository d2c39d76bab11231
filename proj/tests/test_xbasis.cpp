#include <doctest.h>

#include <array>
#include <cmath>
#include <random>
#include <thread>
#include <tuple>

#include "paulipf/circuits.hpp"
#include "paulipf/xbasis.hpp"

using namespace paulipf;

namespace {
using L = PauliLetter;
const ComplexScalar I{0.0, 1.0};
}  // namespace

TEST_CASE("the twelve matrices carry their Pauli identities") {
  const XBasis& xb = XBasis::instance();

  // X3 = diag(1,1,-1,-1) is Z (x) I; X10 = diag(1,-1,-1,1) is Z (x) Z.
  CHECK(xb.mat(2)(0, 0) == ComplexScalar(1.0));
  CHECK(xb.mat(2)(2, 2) == ComplexScalar(-1.0));
  CHECK(xb.pauli_id(2) == PauliElement::two(L::Z, L::I));
  CHECK(xb.mat(9)(1, 1) == ComplexScalar(-1.0));
  CHECK(xb.mat(9)(3, 3) == ComplexScalar(1.0));
  CHECK(xb.pauli_id(9) == PauliElement::two(L::Z, L::Z));
  CHECK(xb.pauli_id(5) == PauliElement::two(L::I, L::Y, 1));  // X6 = i(I(x)Y)

  for (int j = 0; j < 12; ++j) {
    CHECK(max_abs_diff(to_matrix(xb.pauli_id(j)), xb.mat(j)) == 0.0);
    CHECK(max_abs_diff(xb.exact(j).to_cmatrix(), xb.mat(j)) == 0.0);
  }
}

TEST_CASE("mixed commutation relations hold exactly") {
  const XBasis& xb = XBasis::instance();
  const auto anti = [&](int a, int b) {
    return xb.exact(a) * xb.exact(b) + xb.exact(b) * xb.exact(a);
  };
  const auto comm = [&](int a, int b) {
    return xb.exact(a) * xb.exact(b) - xb.exact(b) * xb.exact(a);
  };
  CHECK(anti(0, 1).is_zero());  // {X1, X2} = 0
  CHECK(anti(0, 2).is_zero());  // {X1, X3} = 0
  CHECK(comm(1, 3).is_zero());  // [X2, X4] = 0
  CHECK(comm(1, 4).is_zero());  // [X2, X5] = 0
}

TEST_CASE("exact commutant: full family, single member, empty family") {
  const XBasis& xb = XBasis::instance();

  SUBCASE("all twelve pin the commutant to the identity line") {
    const CommutantResult res = commutant_dimension(xb.mats_vector());
    REQUIRE(res.dim == 1);
    const ExactMatrix& m = res.basis[0];
    const ExactComplex lead = m(0, 0);
    REQUIRE(!lead.is_zero());
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        if (i == j)
          CHECK(m(i, j) == lead);
        else
          CHECK(m(i, j).is_zero());
      }
  }
  SUBCASE("a single diagonal member leaves the two-block commutant") {
    CHECK(commutant_dimension({xb.mat(2)}).dim == 8);
  }
  SUBCASE("no constraints, full space") {
    CHECK(commutant_dimension({}).dim == 16);
  }
  SUBCASE("kernel vectors commute with the family, exactly") {
    const std::vector<CMatrix> fam = {xb.mat(0), xb.mat(6), xb.mat(9)};
    const CommutantResult res = commutant_dimension(fam);
    std::vector<ExactMatrix> exact_fam;
    for (int j : {0, 6, 9}) exact_fam.push_back(xb.exact(j));
    for (const auto& m : res.basis)
      for (const auto& x : exact_fam)
        CHECK((x * m - m * x).is_zero());
  }
  SUBCASE("non Gaussian entries are rejected") {
    CMatrix half(4, 4);
    half(0, 0) = 0.5;
    CHECK_THROWS_AS(commutant_dimension({half}), NonGaussianEntries);
    CMatrix mixed(4, 4);
    mixed(1, 2) = ComplexScalar(1.0, 1.0);
    CHECK_THROWS_AS(commutant_dimension({mixed}), NonGaussianEntries);
  }
}

TEST_CASE("commutant dimension cross-checked by counting commuting words") {
  // Any 4x4 matrix expands over the sixteen two-letter words, and each
  // word either commutes or anticommutes with a given word. A matrix
  // therefore commutes with the whole family iff its expansion uses only
  // words commuting with every member, so the kernel dimension equals the
  // number of such words. This route is symbolic and independent of the
  // elimination path.
  const XBasis& xb = XBasis::instance();
  auto count_commuting = [&](const std::vector<int>& family) {
    int n = 0;
    for (int w = 0; w < 16; ++w) {
      const PauliElement cand = PauliElement::two(
          static_cast<L>(w / 4), static_cast<L>(w % 4));
      bool all = true;
      for (int j : family) {
        const PauliElement id = xb.pauli_id(j);  // phases are central
        if (pauli_mul(cand, id) != pauli_mul(id, cand)) all = false;
      }
      if (all) ++n;
    }
    return n;
  };

  std::vector<int> all12(12);
  for (int j = 0; j < 12; ++j) all12[j] = j;
  CHECK(count_commuting(all12) == 1);
  CHECK(commutant_dimension(xb.mats_vector()).dim == 1);

  CHECK(count_commuting({2}) == 8);
  CHECK(commutant_dimension({xb.mat(2)}).dim == 8);

  CHECK(count_commuting({0, 6, 9}) ==
        commutant_dimension({xb.mat(0), xb.mat(6), xb.mat(9)}).dim);
  CHECK(count_commuting({1, 7}) ==
        commutant_dimension({xb.mat(1), xb.mat(7)}).dim);
}

TEST_CASE("lifted pairs: anticommutation and factorwise commutation") {
  std::mt19937_64 rng(51);
  std::uniform_real_distribution<double> theta_d(0.0, 2 * M_PI);
  std::uniform_real_distribution<double> delta_d(-1.0, 1.0);
  const CMatrix id4 = CMatrix::identity(4);
  for (int trial = 0; trial < 100; ++trial) {
    const double delta = delta_d(rng);
    std::uniform_real_distribution<double> omega_d(std::abs(delta) + 0.1, 3.0);
    const PseudofermionParams p(theta_d(rng), delta, omega_d(rng));
    const LiftedPair lp = lifted_pf(p);
    CHECK(max_abs_diff(anticommutator(lp.a, lp.b), id4) <= 1e-12);
    CHECK(max_abs_diff(anticommutator(lp.atilde, lp.btilde), id4) <= 1e-12);
    CHECK((lp.a * lp.a).max_abs() <= 1e-12);
    CHECK((lp.btilde * lp.btilde).max_abs() <= 1e-12);
    for (const CMatrix* m : {&lp.a, &lp.b})
      for (const CMatrix* t : {&lp.atilde, &lp.btilde})
        CHECK(commutator(*m, *t).max_abs() <= 1e-12);
  }
}

TEST_CASE("gamma triples at (pi/2, 0, 1) hit the basis matrices") {
  const GammaSets gs = gamma_sets({M_PI / 2, 0.0, 1.0});
  const XBasis& xb = XBasis::instance();
  CHECK(max_abs_diff(gs.gamma_mu[0], -xb.mat(2)) <= 1e-14);  // mu1 (x) I = -X3
  CHECK(max_abs_diff(gs.gamma_nu[0], -xb.mat(3)) <= 1e-14);  // I (x) mu1 = -X4

  const LiftedPair lp = lifted_pf({M_PI / 2, 0.0, 1.0});
  CHECK(max_abs_diff(lp.b + lp.a, -xb.mat(2)) <= 1e-14);  // (B+A) = -X3
}

TEST_CASE("realization identities at theta = pi/2, delta = 0") {
  for (double omega : {0.5, 1.0, 2.5}) {
    const XRealizationReport rep =
        verify_x_realization({M_PI / 2, 0.0, omega});
    // Four identities hold at machine precision.
    CHECK(rep.checks[1].pass);  // X2 = BA - AB
    CHECK(rep.checks[2].pass);  // X3 = -(B+A)
    CHECK(rep.checks[3].pass);  // X4 = -(Bt+At)
    CHECK(rep.checks[5].pass);  // X6 = i(BtAt - AtBt)
    // The two that factor through mu1*mu2 do not: i(AB-BA) evaluates to
    // -i(Y (x) I), which differs from X1 = X (x) I entrywise by 2.
    CHECK(!rep.checks[0].pass);
    CHECK(rep.checks[0].max_err == doctest::Approx(2.0));
    CHECK(!rep.checks[4].pass);
    CHECK(rep.checks[4].max_err == doctest::Approx(2.0));
    CHECK(!rep.all_pass());
  }
  CHECK_THROWS_AS(verify_x_realization({0.0, 0.0, 1.0}), WrongParameterPoint);
  CHECK_THROWS_AS(verify_x_realization({M_PI / 2, 0.1, 1.0}),
                  WrongParameterPoint);
}

TEST_CASE("two-qubit group generation and central product, symbolically") {
  const P2GenerationReport rep = verify_p2_generation();
  CHECK(rep.order_x_generators == 64);
  CHECK(rep.order_standard == 64);
  CHECK(rep.sets_equal);
  CHECK(rep.order_u == 16);
  CHECK(rep.order_v == 16);
  CHECK(rep.central_product);
  CHECK(rep.generator_commutators_trivial);
  CHECK(rep.ok());
}

TEST_CASE("decomposition over the basis: circuit generators land exactly") {
  std::mt19937_64 rng(52);
  std::uniform_real_distribution<double> box(-2.0, 2.0);

  SUBCASE("L_S coefficients") {
    for (int trial = 0; trial < 50; ++trial) {
      const CircuitParamsS p{box(rng), box(rng), box(rng)};
      const XDecomposition d = decompose_in_xbasis(build_LS(p));
      CHECK(d.residual <= 1e-12);
      const auto want = ls_x_coefficients(p);
      for (int j = 0; j < 12; ++j)
        CHECK(std::abs(d.coefficients[j] - want[j]) <= 1e-12);
    }
  }
  SUBCASE("alpha = 1, mu = 0, gamma = 0 leaves only the slot-2 weight i") {
    const XDecomposition d =
        decompose_in_xbasis(build_LS({1.0, 0.0, 0.0}));
    CHECK(std::abs(d.coefficients[1] - I) <= 1e-13);
    for (int j : {0, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11})
      CHECK(std::abs(d.coefficients[j]) <= 1e-13);
    CHECK(d.residual <= 1e-12);
  }
  SUBCASE("H_T coefficients") {
    for (int trial = 0; trial < 50; ++trial) {
      const CircuitParamsT p{box(rng), box(rng), box(rng)};
      const XDecomposition d = decompose_in_xbasis(build_HT(p));
      CHECK(d.residual <= 1e-12);
      const auto want = ht_x_coefficients(p);
      for (int j = 0; j < 12; ++j)
        CHECK(std::abs(d.coefficients[j] - want[j]) <= 1e-12);
    }
  }
  SUBCASE("identity sits outside the span") {
    const XDecomposition d = decompose_in_xbasis(CMatrix::identity(4));
    CHECK(d.residual > 0.5);
  }
  SUBCASE("a basis member picks out its own slot") {
    const XDecomposition d =
        decompose_in_xbasis(XBasis::instance().mat(6));  // X7
    CHECK(std::abs(d.coefficients[6] - ComplexScalar(1.0)) <= 1e-13);
    for (int j = 0; j < 12; ++j)
      if (j != 6) CHECK(std::abs(d.coefficients[j]) <= 1e-13);
    CHECK(d.residual <= 1e-13);
  }
}

TEST_CASE("library calls are safe to issue from several threads") {
  // Everything is value-typed and pure; run the same computations on four
  // threads and require identical results.
  auto job = [] {
    const MuTriple mu = mu_ops({M_PI / 2, 0.0, 1.0});
    const CommutantResult res =
        commutant_dimension({XBasis::instance().mat(2)});
    const BiorthogonalSystem sys = biorthogonal_system({0.7, 0.3, 1.5});
    return std::make_tuple(mu.mu2(0, 1), res.dim, sys.s_phi(0, 1));
  };
  using Result = std::tuple<ComplexScalar, int, ComplexScalar>;
  const Result reference = job();
  std::vector<std::thread> pool;
  std::array<Result, 4> results;
  for (int t = 0; t < 4; ++t)
    pool.emplace_back([&results, t, &job] { results[t] = job(); });
  for (auto& th : pool) th.join();
  for (const auto& r : results) CHECK(r == reference);
}
