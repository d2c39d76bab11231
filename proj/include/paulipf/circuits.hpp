#pragma once

#include <array>
#include <ostream>
#include <vector>

#include "paulipf/complex_matrix.hpp"
#include "paulipf/errors.hpp"

namespace paulipf {

/// Parameters of the gain/loss-coupled oscillator pair S.
struct CircuitParamsS {
  double alpha = 0.0;
  double mu = 0.0;
  double gamma = 0.0;
};

/// Parameters of the symmetric non-self-adjoint circuit Hamiltonian T.
struct CircuitParamsT {
  double b = 0.0;
  double d = 0.0;
  double r = 0.0;
};

/// Generator L_S of the first-order system d/dt Psi = L_S Psi, with
/// Psi = (Q1, Q2, dQ1, dQ2).
CMatrix build_LS(const CircuitParamsS& p);

/// Formal Hamiltonian H_S = i L_S (not Hermitian in general).
CMatrix h_s(const CircuitParamsS& p);

/// Symmetric, non-self-adjoint 4x4 Hamiltonian of system T, taken verbatim:
/// rows (0, b+ir, d+ir, 0), (b+ir, 0, 0, d-ir), (d+ir, 0, 0, d-ir),
/// (0, d-ir, d-ir, 0). Symmetry (H = H^T) is asserted at construction.
CMatrix build_HT(const CircuitParamsT& p);

struct Trajectory {
  std::vector<double> times;   // strictly increasing
  std::vector<CVector> states;  // one 4-vector per grid point
};

/// states[j] = exp(L t_j) psi0; the t = 0 state is psi0 exactly.
///
/// Growth is allowed and reported, not suppressed: a gain channel makes
/// blow-up physically meaningful, so leaving the double range raises
/// OverflowError naming the first bad time.
Trajectory evolve(const CMatrix& l, const CVector& psi0,
                  const std::vector<double>& times);

/// Max over interior grid points of the central-difference defect
/// ||(Psi(t+h) - Psi(t-h)) / 2h - L Psi(t)||_max. The grid must be uniform
/// with step <= 1e-2; fewer than 3 points (or a coarser step) raises
/// GridTooCoarse.
double derivative_check(const Trajectory& traj, const CMatrix& l);

/// CSV with header t,re_Q1,im_Q1,re_Q2,im_Q2,re_dQ1,im_dQ1,re_dQ2,im_dQ2,
/// 17 significant digits per value (round-trippable doubles).
void write_trajectory_csv(std::ostream& os, const Trajectory& traj);

/// Coefficients reconstructing L_S over the twelve-matrix basis: nonzero
/// slots {1,2,4,7,9,10} (1-based) with values (1-alpha)/2, i(1+alpha)/2,
/// gamma/2, alpha mu/2, alpha mu/(2i), -gamma/2.
std::array<ComplexScalar, 12> ls_x_coefficients(const CircuitParamsS& p);

/// Coefficients reconstructing H_T over the twelve-matrix basis: nonzero
/// slots {1,5,11,12} with values d, (b+d)/2, (b-d)/2 + ir, ir.
std::array<ComplexScalar, 12> ht_x_coefficients(const CircuitParamsT& p);

}  // namespace paulipf
