#include "paulipf/xbasis.hpp"

#include <cmath>
#include <sstream>

namespace paulipf {

namespace {

// Entry table for X_1..X_12: {re, im} per entry, row-major.
struct GaussEntry {
  int re, im;
};

constexpr GaussEntry kXData[12][16] = {
    // X1
    {{0, 0}, {0, 0}, {1, 0}, {0, 0}, {0, 0}, {0, 0}, {0, 0}, {1, 0},
     {1, 0}, {0, 0}, {0, 0}, {0, 0}, {0, 0}, {1, 0}, {0, 0}, {0, 0}},
    // X2
    {{0, 0}, {0, 0}, {0, -1}, {0, 0}, {0, 0}, {0, 0}, {0, 0}, {0, -1},
     {0, 1}, {0, 0}, {0, 0}, {0, 0}, {0, 0}, {0, 1}, {0, 0}, {0, 0}},
    // X3
    {{1, 0}, {0, 0}, {0, 0}, {0, 0}, {0, 0}, {1, 0}, {0, 0}, {0, 0},
     {0, 0}, {0, 0}, {-1, 0}, {0, 0}, {0, 0}, {0, 0}, {0, 0}, {-1, 0}},
    // X4
    {{1, 0}, {0, 0}, {0, 0}, {0, 0}, {0, 0}, {-1, 0}, {0, 0}, {0, 0},
     {0, 0}, {0, 0}, {1, 0}, {0, 0}, {0, 0}, {0, 0}, {0, 0}, {-1, 0}},
    // X5
    {{0, 0}, {1, 0}, {0, 0}, {0, 0}, {1, 0}, {0, 0}, {0, 0}, {0, 0},
     {0, 0}, {0, 0}, {0, 0}, {1, 0}, {0, 0}, {0, 0}, {1, 0}, {0, 0}},
    // X6
    {{0, 0}, {1, 0}, {0, 0}, {0, 0}, {-1, 0}, {0, 0}, {0, 0}, {0, 0},
     {0, 0}, {0, 0}, {0, 0}, {1, 0}, {0, 0}, {0, 0}, {-1, 0}, {0, 0}},
    // X7
    {{0, 0}, {0, 0}, {0, 0}, {1, 0}, {0, 0}, {0, 0}, {1, 0}, {0, 0},
     {0, 0}, {1, 0}, {0, 0}, {0, 0}, {1, 0}, {0, 0}, {0, 0}, {0, 0}},
    // X8
    {{0, 0}, {0, 0}, {0, -1}, {0, 0}, {0, 0}, {0, 0}, {0, 0}, {0, 1},
     {0, 1}, {0, 0}, {0, 0}, {0, 0}, {0, 0}, {0, -1}, {0, 0}, {0, 0}},
    // X9
    {{0, 0}, {0, 0}, {0, 0}, {0, -1}, {0, 0}, {0, 0}, {0, -1}, {0, 0},
     {0, 0}, {0, 1}, {0, 0}, {0, 0}, {0, 1}, {0, 0}, {0, 0}, {0, 0}},
    // X10
    {{1, 0}, {0, 0}, {0, 0}, {0, 0}, {0, 0}, {-1, 0}, {0, 0}, {0, 0},
     {0, 0}, {0, 0}, {-1, 0}, {0, 0}, {0, 0}, {0, 0}, {0, 0}, {1, 0}},
    // X11
    {{0, 0}, {1, 0}, {0, 0}, {0, 0}, {1, 0}, {0, 0}, {0, 0}, {0, 0},
     {0, 0}, {0, 0}, {0, 0}, {-1, 0}, {0, 0}, {0, 0}, {-1, 0}, {0, 0}},
    // X12
    {{0, 0}, {0, 0}, {1, 0}, {0, 0}, {0, 0}, {0, 0}, {0, 0}, {-1, 0},
     {1, 0}, {0, 0}, {0, 0}, {0, 0}, {0, 0}, {-1, 0}, {0, 0}, {0, 0}},
};

const ComplexScalar kI{0.0, 1.0};

/// Exact linear map vec(M) -> vec(XM - MX) for row-major vec:
/// X (x) I - I (x) X^T, as a 16x16 block.
ExactMatrix commutator_map(const ExactMatrix& x) {
  const int n = x.rows();
  const int n2 = n * n;
  ExactMatrix c(n2, n2);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const ExactComplex& xij = x(i, j);
      if (xij.is_zero()) continue;
      // (X (x) I): block (i,j) is xij * I.
      for (int p = 0; p < n; ++p)
        c(i * n + p, j * n + p) = c(i * n + p, j * n + p) + xij;
      // (I (x) X^T): entry ((p,i),(p,j)) of the transposed factor.
      for (int p = 0; p < n; ++p)
        c(p * n + j, p * n + i) = c(p * n + j, p * n + i) - xij;
    }
  return c;
}

ExactComplex exact_from_gauss(GaussEntry g) {
  return {Rational(g.re), Rational(g.im)};
}

}  // namespace

XBasis::XBasis() {
  for (int j = 0; j < 12; ++j) {
    CMatrix m(4, 4);
    ExactMatrix em(4, 4);
    for (int k = 0; k < 16; ++k) {
      const GaussEntry g = kXData[j][k];
      m(k / 4, k % 4) = ComplexScalar(g.re, g.im);
      em(k / 4, k % 4) = exact_from_gauss(g);
    }
    mats_[j] = m;
    exact_[j] = em;
    ids_[j] = from_matrix(m);  // throws NotPauli if the table were off
    if (max_abs_diff(to_matrix(ids_[j]), m) != 0.0)
      throw Error("X basis: Pauli identification failed to round-trip");
  }

  // The twelve matrices must be linearly independent as 16-vectors.
  ExactMatrix stacked(12, 16);
  for (int j = 0; j < 12; ++j)
    for (int k = 0; k < 16; ++k)
      stacked(j, k) = exact_[j](k / 4, k % 4);
  if (exact_rank(stacked) != 12)
    throw Error("X basis: rank is not 12");
}

const XBasis& XBasis::instance() {
  static const XBasis basis;
  return basis;
}

std::vector<CMatrix> XBasis::mats_vector() const {
  return std::vector<CMatrix>(mats_.begin(), mats_.end());
}

CommutantResult commutant_dimension(const std::vector<CMatrix>& mats) {
  // Validate and convert: every entry must be exactly 0, +-1 or +-i.
  std::vector<ExactMatrix> exact;
  exact.reserve(mats.size());
  for (const CMatrix& m : mats) {
    if (m.rows() != 4 || m.cols() != 4)
      throw DimensionMismatch("commutant_dimension: matrices must be 4x4");
    ExactMatrix em(4, 4);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        const ComplexScalar z = m(i, j);
        const double re = z.real(), im = z.imag();
        const bool unit_re = re == 0.0 || re == 1.0 || re == -1.0;
        const bool unit_im = im == 0.0 || im == 1.0 || im == -1.0;
        if (!unit_re || !unit_im || (re != 0.0 && im != 0.0)) {
          std::ostringstream os;
          os << "commutant_dimension: entry (" << i << "," << j << ") = ("
             << re << "," << im << ") is not in {0, +-1, +-i}";
          throw NonGaussianEntries(os.str());
        }
        em(i, j) = ExactComplex(Rational(static_cast<std::int64_t>(re)),
                                Rational(static_cast<std::int64_t>(im)));
      }
    exact.push_back(std::move(em));
  }

  CommutantResult out;
  if (exact.empty()) {
    out.dim = 16;
    for (int k = 0; k < 16; ++k) {
      ExactMatrix e(4, 4);
      e(k / 4, k % 4) = ExactComplex(Rational(1));
      out.basis.push_back(std::move(e));
    }
    return out;
  }

  ExactMatrix stacked(16 * static_cast<int>(exact.size()), 16);
  for (size_t j = 0; j < exact.size(); ++j) {
    const ExactMatrix block = commutator_map(exact[j]);
    for (int r = 0; r < 16; ++r)
      for (int c = 0; c < 16; ++c)
        stacked(static_cast<int>(j) * 16 + r, c) = block(r, c);
  }

  const auto kernel = null_space(stacked);
  out.dim = static_cast<int>(kernel.size());
  for (const auto& v : kernel) {
    ExactMatrix m(4, 4);
    for (int k = 0; k < 16; ++k) m(k / 4, k % 4) = v[k];
    out.basis.push_back(std::move(m));
  }
  return out;
}

LiftedPair lifted_pf(const PseudofermionParams& p) {
  const PseudofermionPair pf = make_pf_pair(p);
  const CMatrix id = CMatrix::identity(2);
  LiftedPair lifted{kron(pf.a, id), kron(pf.b, id), kron(id, pf.a),
                    kron(id, pf.b), p};

  const CMatrix id4 = CMatrix::identity(4);
  const CMatrix zero4(4, 4);
  auto check = [&](const CMatrix& got, const CMatrix& want, const char* what) {
    if (max_abs_diff(got, want) > 1e-12)
      throw CrossCheckFailure(std::string("lifted_pf: ") + what);
  };
  check(anticommutator(lifted.a, lifted.b), id4, "{A,B} != I");
  check(lifted.a * lifted.a, zero4, "A^2 != 0");
  check(lifted.b * lifted.b, zero4, "B^2 != 0");
  check(anticommutator(lifted.atilde, lifted.btilde), id4, "{At,Bt} != I");
  check(lifted.atilde * lifted.atilde, zero4, "At^2 != 0");
  check(lifted.btilde * lifted.btilde, zero4, "Bt^2 != 0");
  return lifted;
}

GammaSets gamma_sets(const PseudofermionParams& p) {
  const MuTriple mu = mu_ops(p);
  const LiftedPair lp = lifted_pf(p);
  const CMatrix id = CMatrix::identity(2);

  GammaSets gs;
  gs.gamma_mu = {kron(mu.mu1, id), kron(mu.mu2, id), kron(mu.mu3, id)};
  gs.gamma_nu = {kron(id, mu.mu1), kron(id, mu.mu2), kron(id, mu.mu3)};

  const std::array<CMatrix, 3> mu_route = {
      lp.b + lp.a, (lp.b - lp.a) * kI, lp.a * lp.b - lp.b * lp.a};
  const std::array<CMatrix, 3> nu_route = {
      lp.btilde + lp.atilde, (lp.btilde - lp.atilde) * kI,
      lp.atilde * lp.btilde - lp.btilde * lp.atilde};
  for (int i = 0; i < 3; ++i) {
    if (max_abs_diff(gs.gamma_mu[i], mu_route[i]) > 1e-12 ||
        max_abs_diff(gs.gamma_nu[i], nu_route[i]) > 1e-12) {
      throw CrossCheckFailure("gamma_sets: lift and operator routes disagree");
    }
  }
  return gs;
}

bool XRealizationReport::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

XRealizationReport verify_x_realization(const PseudofermionParams& p) {
  if (std::abs(p.theta() - M_PI / 2) > 1e-12 || std::abs(p.delta()) > 1e-12)
    throw WrongParameterPoint(
        "verify_x_realization: requires theta = pi/2, delta = 0");

  const LiftedPair lp = lifted_pf(p);
  const XBasis& xb = XBasis::instance();
  const CMatrix& a = lp.a;
  const CMatrix& b = lp.b;
  const CMatrix& at = lp.atilde;
  const CMatrix& bt = lp.btilde;

  const std::array<std::pair<const char*, CMatrix>, 6> rhs = {{
      {"X1 = i(AB-BA)", (a * b - b * a) * kI},
      {"X2 = BA-AB", b * a - a * b},
      {"X3 = -(B+A)", -(b + a)},
      {"X4 = -(Bt+At)", -(bt + at)},
      {"X5 = i(AtBt-BtAt)", (at * bt - bt * at) * kI},
      {"X6 = i(BtAt-AtBt)", (bt * at - at * bt) * kI},
  }};

  XRealizationReport report;
  for (int j = 0; j < 6; ++j) {
    const double err = max_abs_diff(xb.mat(j), rhs[j].second);
    report.checks[j] = IdentityCheck{rhs[j].first, err <= 1e-12, err};
  }
  return report;
}

bool P2GenerationReport::ok() const {
  return order_x_generators == 64 && order_standard == 64 && sets_equal &&
         order_u == 16 && order_v == 16 && central_product &&
         generator_commutators_trivial;
}

P2GenerationReport verify_p2_generation() {
  const XBasis& xb = XBasis::instance();
  P2GenerationReport rep;

  std::vector<PauliElement> xgens;
  for (int j = 0; j < 6; ++j) xgens.push_back(xb.pauli_id(j));
  const FiniteMatrixGroup from_x = generate_group(xgens);
  rep.order_x_generators = from_x.order();

  const auto L = [](PauliLetter l1, PauliLetter l2) {
    return PauliElement::two(l1, l2);
  };
  const std::vector<PauliElement> standard = {
      L(PauliLetter::X, PauliLetter::I), L(PauliLetter::Y, PauliLetter::I),
      L(PauliLetter::Z, PauliLetter::I), L(PauliLetter::I, PauliLetter::X),
      L(PauliLetter::I, PauliLetter::Y), L(PauliLetter::I, PauliLetter::Z)};
  const FiniteMatrixGroup p2 = generate_group(standard);
  rep.order_standard = p2.order();
  rep.sets_equal = from_x.same_elements(p2);

  const PseudofermionParams point(M_PI / 2, 0.0, 1.0);
  const GammaSets gs = gamma_sets(point);
  std::vector<PauliElement> ugens, vgens;
  for (int i = 0; i < 3; ++i) {
    ugens.push_back(from_matrix(gs.gamma_mu[i]));
    vgens.push_back(from_matrix(gs.gamma_nu[i]));
  }
  const FiniteMatrixGroup u = generate_group(ugens);
  const FiniteMatrixGroup v = generate_group(vgens);
  rep.order_u = u.order();
  rep.order_v = v.order();
  rep.central_product = is_central_product(p2, u, v).ok;

  rep.generator_commutators_trivial = true;
  for (const auto& ug : ugens)
    for (const auto& vg : vgens) {
      const PauliElement comm = pauli_mul(
          pauli_mul(pauli_inverse(ug), pauli_inverse(vg)), pauli_mul(ug, vg));
      if (!comm.is_identity()) rep.generator_commutators_trivial = false;
    }
  return rep;
}

XDecomposition decompose_in_xbasis(const CMatrix& target) {
  const SpanDecomposition d =
      span_decompose(XBasis::instance().mats_vector(), target);
  XDecomposition out;
  for (int j = 0; j < 12; ++j) out.coefficients[j] = d.coefficients[j];
  out.residual = d.residual;
  return out;
}

}  // namespace paulipf
