#pragma once

#include <istream>
#include <utility>
#include <vector>

#include "paulipf/complex_matrix.hpp"
#include "paulipf/errors.hpp"

namespace paulipf {

/// Parameters (theta, delta, |omega|) of the two-level-atom model, with the
/// derived Omega = sqrt(|omega|^2 - delta^2).
///
/// Construction rejects |omega| <= |delta|: at the exceptional point Omega
/// vanishes and the ladder-operator construction degenerates.
class PseudofermionParams {
 public:
  PseudofermionParams(double theta, double delta, double omega_abs);

  double theta() const { return theta_; }
  double delta() const { return delta_; }
  double omega_abs() const { return omega_abs_; }
  /// Omega = sqrt(|omega|^2 - delta^2), real and strictly positive.
  double big_omega() const { return big_omega_; }
  /// omega = |omega| e^{i theta}.
  ComplexScalar omega() const;

 private:
  double theta_, delta_, omega_abs_, big_omega_;
};

/// Operator pair with {a,b} = I and a^2 = b^2 = 0, where b need not be a*.
struct PseudofermionPair {
  CMatrix a, b;
  PseudofermionParams params;
};

/// Builds the ladder pair from its entrywise closed form and verifies the
/// anticommutation rules to 1e-12 before returning.
PseudofermionPair make_pf_pair(const PseudofermionParams& p);

/// Effective two-level Hamiltonian (1/2)[[-i delta, conj(omega)],
/// [omega, i delta]]; verified against Omega(ba - I/2) to 1e-12.
CMatrix h_eff(const PseudofermionParams& p);

/// Non-self-adjoint number operators N = b a and N* = a* b*.
std::pair<CMatrix, CMatrix> number_ops(const PseudofermionPair& pair);

struct MuTriple {
  CMatrix mu1, mu2, mu3;
};

/// mu1 = b + a, mu2 = i(b - a), mu3 = ab - ba, computed algebraically and
/// cross-checked against the entrywise closed forms to 1e-12.
MuTriple mu_ops(const PseudofermionParams& p);

/// Entrywise closed forms of the mu operators. The (2,1) entry of mu2 is
/// -i e^{i theta}: that sign is forced by mu2 = i(b - a).
MuTriple mu_closed_forms(const PseudofermionParams& p);

/// Biorthogonal eigenbasis pair with its metric operators.
struct BiorthogonalSystem {
  CVector phi0, phi1, psi0, psi1;
  ComplexScalar k, kprime;
  CMatrix s_phi, s_psi;
};

/// Builds the eigenvectors, fixes the normalization gauge (k real positive,
/// k' carrying the phase so that <phi0, psi0> = 1), forms the metric
/// operators as rank-2 sums and cross-checks them against their closed
/// forms to 1e-10.
BiorthogonalSystem biorthogonal_system(const PseudofermionParams& p);

struct Fermionization {
  CMatrix c;  // standard fermionic mode, c = T^-1 a T
  CMatrix t;  // Hermitian positive intertwiner, T = sqrt(S_phi)
};

/// Similarity transform to a standard fermion pair; postconditions
/// ({c,c*} = I, c^2 = 0, a = T c T^-1, b = T c* T^-1) are verified to 1e-10.
Fermionization fermionize(const PseudofermionPair& pair,
                          const BiorthogonalSystem& sys);

/// Reads "theta delta omega_abs" triples, one per line, skipping blanks.
std::vector<PseudofermionParams> read_param_sweep(std::istream& in);

}  // namespace paulipf
