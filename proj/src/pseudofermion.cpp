#include "paulipf/pseudofermion.hpp"

#include <cmath>
#include <sstream>

namespace paulipf {

namespace {

const ComplexScalar kI{0.0, 1.0};

void cross_check(const CMatrix& got, const CMatrix& want, double tol,
                 const char* what) {
  const double err = max_abs_diff(got, want);
  if (err > tol) {
    std::ostringstream os;
    os << what << ": cross-check failed, max entry error " << err;
    throw CrossCheckFailure(os.str());
  }
}

}  // namespace

PseudofermionParams::PseudofermionParams(double theta, double delta,
                                         double omega_abs)
    : theta_(theta), delta_(delta), omega_abs_(omega_abs) {
  if (!std::isfinite(theta) || !std::isfinite(delta) ||
      !std::isfinite(omega_abs))
    throw DegenerateParams("parameters must be finite");
  if (!(omega_abs > std::abs(delta)))
    throw DegenerateParams(
        "|omega| must exceed |delta| (Omega would not be real positive)");
  big_omega_ = std::sqrt(omega_abs * omega_abs - delta * delta);
}

ComplexScalar PseudofermionParams::omega() const {
  return std::polar(omega_abs_, theta_);
}

PseudofermionPair make_pf_pair(const PseudofermionParams& p) {
  const double om = p.big_omega();
  const double w = p.omega_abs();
  const double d = p.delta();
  const ComplexScalar u = std::polar(1.0, p.theta());
  const ComplexScalar ub = std::conj(u);
  const ComplexScalar plus{om, d};   // Omega + i delta
  const ComplexScalar minus{om, -d};  // Omega - i delta
  const ComplexScalar f{1.0 / (2.0 * om), 0.0};

  CMatrix a = CMatrix::from_rows({{-w, -ub * plus}, {u * minus, w}}) * f;
  CMatrix b = CMatrix::from_rows({{-w, ub * minus}, {-u * plus, w}}) * f;

  const CMatrix id = CMatrix::identity(2);
  cross_check(anticommutator(a, b), id, 1e-12, "pseudofermion pair {a,b}=I");
  cross_check(a * a, CMatrix(2, 2), 1e-12, "pseudofermion pair a^2=0");
  cross_check(b * b, CMatrix(2, 2), 1e-12, "pseudofermion pair b^2=0");
  return PseudofermionPair{a, b, p};
}

CMatrix h_eff(const PseudofermionParams& p) {
  const ComplexScalar w = p.omega();
  CMatrix h = CMatrix::from_rows({{-kI * p.delta(), std::conj(w)},
                                  {w, kI * p.delta()}}) *
              ComplexScalar(0.5);

  const PseudofermionPair pf = make_pf_pair(p);
  const CMatrix alg = (pf.b * pf.a - CMatrix::identity(2) * ComplexScalar(0.5)) *
                      ComplexScalar(p.big_omega());
  cross_check(h, alg, 1e-12, "h_eff vs Omega(ba - I/2)");
  return h;
}

std::pair<CMatrix, CMatrix> number_ops(const PseudofermionPair& pair) {
  CMatrix n = pair.b * pair.a;
  CMatrix nstar = pair.a.adjoint() * pair.b.adjoint();
  cross_check(nstar, n.adjoint(), 1e-12, "number_ops N* vs adjoint(N)");
  return {n, nstar};
}

MuTriple mu_closed_forms(const PseudofermionParams& p) {
  const double om = p.big_omega();
  const double w = p.omega_abs();
  const double d = p.delta();
  const ComplexScalar u = std::polar(1.0, p.theta());
  const ComplexScalar ub = std::conj(u);

  MuTriple m;
  m.mu1 = CMatrix::from_rows({{-w, -kI * d * ub}, {-kI * d * u, w}}) *
          ComplexScalar(1.0 / om);
  // mu2 = i(b-a) entrywise; the (2,1) sign is fixed by that relation.
  m.mu2 = CMatrix::from_rows({{0, kI * ub}, {-kI * u, 0}});
  m.mu3 = CMatrix::from_rows({{kI * d, -w * ub}, {-w * u, -kI * d}}) *
          ComplexScalar(1.0 / om);
  return m;
}

MuTriple mu_ops(const PseudofermionParams& p) {
  const PseudofermionPair pf = make_pf_pair(p);
  MuTriple m;
  m.mu1 = pf.b + pf.a;
  m.mu2 = (pf.b - pf.a) * kI;
  m.mu3 = pf.a * pf.b - pf.b * pf.a;

  const MuTriple cf = mu_closed_forms(p);
  cross_check(m.mu1, cf.mu1, 1e-12, "mu1 closed form");
  cross_check(m.mu2, cf.mu2, 1e-12, "mu2 closed form");
  cross_check(m.mu3, cf.mu3, 1e-12, "mu3 closed form");
  return m;
}

BiorthogonalSystem biorthogonal_system(const PseudofermionParams& p) {
  const double om = p.big_omega();
  const double w = p.omega_abs();
  const double d = p.delta();
  const ComplexScalar u = std::polar(1.0, p.theta());
  const ComplexScalar plus{om, d};
  const ComplexScalar minus{om, -d};

  // <phi0, psi0> = conj(k) k' (1 + (Omega + i delta)^2 / |omega|^2), and the
  // bracket equals 2 Omega (Omega + i delta) / |omega|^2. The gauge here
  // takes k real positive and lets k' carry the phase; both moduli equal
  // sqrt(|omega| / (2 Omega)), and k' = k when delta = 0.
  const ComplexScalar k{std::sqrt(w / (2.0 * om)), 0.0};
  const ComplexScalar kprime = minus / (2.0 * om * k);

  BiorthogonalSystem sys;
  sys.k = k;
  sys.kprime = kprime;
  sys.phi0 = CVector{k, -k * u * minus / w};
  sys.psi0 = CVector{kprime, -kprime * u * plus / w};

  const ComplexScalar pairing = inner(sys.phi0, sys.psi0);
  if (std::abs(pairing - ComplexScalar(1.0)) > 1e-10)
    throw NormalizationFailure("biorthogonal pairing <phi0,psi0> != 1");

  const PseudofermionPair pf = make_pf_pair(p);
  sys.phi1 = pf.b * sys.phi0;
  sys.psi1 = pf.a.adjoint() * sys.psi0;

  sys.s_phi = outer(sys.phi0, sys.phi0) + outer(sys.phi1, sys.phi1);
  sys.s_psi = outer(sys.psi0, sys.psi0) + outer(sys.psi1, sys.psi1);

  // Closed forms of the metric operators.
  const double k2 = std::norm(k);
  const ComplexScalar ub = std::conj(u);
  const CMatrix s_phi_cf =
      CMatrix::from_rows({{1.0, -kI * d * ub / w}, {kI * d * u / w, 1.0}}) *
      ComplexScalar(2.0 * k2);
  const CMatrix s_psi_cf =
      CMatrix::from_rows({{1.0, kI * d * ub / w}, {-kI * d * u / w, 1.0}}) *
      ComplexScalar(w * w / (2.0 * k2 * om * om));
  cross_check(sys.s_phi, s_phi_cf, 1e-10, "S_phi closed form");
  cross_check(sys.s_psi, s_psi_cf, 1e-10, "S_psi closed form");

  // Biorthogonality and mutual inverse.
  const CVector* phis[2] = {&sys.phi0, &sys.phi1};
  const CVector* psis[2] = {&sys.psi0, &sys.psi1};
  for (int j = 0; j < 2; ++j)
    for (int l = 0; l < 2; ++l) {
      const ComplexScalar want = (j == l) ? 1.0 : 0.0;
      if (std::abs(inner(*phis[j], *psis[l]) - want) > 1e-10)
        throw NormalizationFailure("biorthogonality <phi_j, psi_l> failed");
    }
  cross_check(sys.s_phi * sys.s_psi, CMatrix::identity(2), 1e-10,
              "S_phi S_psi = I");
  return sys;
}

Fermionization fermionize(const PseudofermionPair& pair,
                          const BiorthogonalSystem& sys) {
  Fermionization f;
  f.t = psd_sqrt(sys.s_phi);
  const CMatrix tinv = inverse(f.t);
  f.c = tinv * pair.a * f.t;

  const CMatrix cd = f.c.adjoint();
  cross_check(anticommutator(f.c, cd), CMatrix::identity(2), 1e-10,
              "fermionize {c,c*}=I");
  cross_check(f.c * f.c, CMatrix(2, 2), 1e-10, "fermionize c^2=0");
  cross_check(f.t * f.c * tinv, pair.a, 1e-10, "fermionize a = TcT^-1");
  cross_check(f.t * cd * tinv, pair.b, 1e-10, "fermionize b = Tc*T^-1");
  return f;
}

std::vector<PseudofermionParams> read_param_sweep(std::istream& in) {
  std::vector<PseudofermionParams> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    double theta, delta, omega_abs;
    if (!(ls >> theta)) continue;  // blank line
    if (!(ls >> delta >> omega_abs)) {
      throw ParseError("sweep line " + std::to_string(lineno) +
                       ": expected 'theta delta omega_abs'");
    }
    std::string extra;
    if (ls >> extra)
      throw ParseError("sweep line " + std::to_string(lineno) +
                       ": trailing token '" + extra + "'");
    out.emplace_back(theta, delta, omega_abs);
  }
  return out;
}

}  // namespace paulipf
