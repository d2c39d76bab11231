#pragma once

#include <array>
#include <string>
#include <vector>

#include "paulipf/complex_matrix.hpp"
#include "paulipf/exact.hpp"
#include "paulipf/pauli.hpp"
#include "paulipf/pseudofermion.hpp"

namespace paulipf {

/// The fixed family of twelve 4x4 matrices spanning the circuit
/// Hamiltonians. Every member is a Pauli-group element up to a phase of i;
/// group-theoretic claims run on the exact forms, parametrized
/// decompositions on the floating ones.
class XBasis {
 public:
  static const XBasis& instance();

  const CMatrix& mat(int j) const { return mats_[j]; }            // j in 0..11
  const ExactMatrix& exact(int j) const { return exact_[j]; }
  const PauliElement& pauli_id(int j) const { return ids_[j]; }

  const std::array<CMatrix, 12>& mats() const { return mats_; }
  std::vector<CMatrix> mats_vector() const;

 private:
  XBasis();
  std::array<CMatrix, 12> mats_;
  std::array<ExactMatrix, 12> exact_;
  std::array<PauliElement, 12> ids_;
};

struct CommutantResult {
  int dim = 0;
  std::vector<ExactMatrix> basis;  // 4x4, exact
};

/// Exact commutant of a family of 4x4 matrices with entries in {0, +-1, +-i}.
///
/// Stacks the linear maps M -> [M, X_j] into one system (16 equations per
/// matrix) and computes its right null space exactly; dim is therefore an
/// exact rank statement, not a tolerance call. Throws NonGaussianEntries if
/// any entry is outside {0, +-1, +-i}. An empty family yields dim 16.
CommutantResult commutant_dimension(const std::vector<CMatrix>& mats);

/// Pseudofermion pair lifted to dimension 4 on each tensor factor:
/// A = a (x) I, B = b (x) I, Atilde = I (x) a, Btilde = I (x) b.
struct LiftedPair {
  CMatrix a, b, atilde, btilde;
  PseudofermionParams params;
};

LiftedPair lifted_pf(const PseudofermionParams& p);

struct GammaSets {
  std::array<CMatrix, 3> gamma_mu;  // {mu1 (x) I, mu2 (x) I, mu3 (x) I}
  std::array<CMatrix, 3> gamma_nu;  // {I (x) mu1, I (x) mu2, I (x) mu3}
};

/// Builds both generator triples twice over: as Kronecker lifts of the mu
/// operators and from the lifted pair (B+A, i(B-A), AB-BA and the tilded
/// analogues). The two routes must agree to 1e-12 or CrossCheckFailure is
/// thrown.
GammaSets gamma_sets(const PseudofermionParams& p);

struct IdentityCheck {
  std::string name;
  bool pass = false;
  double max_err = 0.0;
};

struct XRealizationReport {
  std::array<IdentityCheck, 6> checks;
  bool all_pass() const;
};

/// Checks the six pseudofermionic identities for X_1..X_6 at the parameter
/// point theta = pi/2, delta = 0 (WrongParameterPoint otherwise):
///   X1 = i(AB-BA), X2 = BA-AB, X3 = -(B+A),
///   X4 = -(Bt+At), X5 = i(At Bt - Bt At), X6 = i(Bt At - At Bt),
/// each at tolerance 1e-12. Results are reported per identity, pass or
/// fail; nothing is adjusted to force agreement.
XRealizationReport verify_x_realization(const PseudofermionParams& p);

struct P2GenerationReport {
  int order_x_generators = 0;   // |<X_1..X_6 ids>|
  int order_standard = 0;       // |<X(x)I, Y(x)I, Z(x)I, I(x)X, I(x)Y, I(x)Z>|
  bool sets_equal = false;
  int order_u = 0;
  int order_v = 0;
  bool central_product = false;
  bool generator_commutators_trivial = false;  // all 9 pairs
  bool ok() const;
};

/// Symbolic verification that X_1..X_6 generate the two-qubit Pauli group,
/// and that it is the central product of the subgroups generated by the
/// gamma triples. Works entirely at the Pauli-element level.
P2GenerationReport verify_p2_generation();

struct XDecomposition {
  std::array<ComplexScalar, 12> coefficients{};
  double residual = 0.0;
};

/// Least-squares decomposition of a 4x4 target over the twelve-matrix
/// basis. The basis has exact rank 12, so coefficients are unique.
XDecomposition decompose_in_xbasis(const CMatrix& target);

}  // namespace paulipf
