#pragma once

// Test-only oracles, kept independent of the library's evolution path.

#include <vector>

#include "paulipf/complex_matrix.hpp"

namespace paulipf::test {

/// Classic fixed-step fourth-order Runge-Kutta for dPsi/dt = L Psi.
/// Returns the state at every grid point 0, h, 2h, ..., n*h.
inline std::vector<CVector> rk4_trajectory(const CMatrix& l,
                                           const CVector& psi0, double h,
                                           int steps) {
  std::vector<CVector> out;
  out.reserve(steps + 1);
  out.push_back(psi0);
  CVector psi = psi0;
  for (int s = 0; s < steps; ++s) {
    const CVector k1 = l * psi;
    const CVector k2 = l * (psi + k1 * (h / 2));
    const CVector k3 = l * (psi + k2 * (h / 2));
    const CVector k4 = l * (psi + k3 * h);
    psi = psi + (k1 + k2 * 2.0 + k3 * 2.0 + k4) * (h / 6);
    out.push_back(psi);
  }
  return out;
}

}  // namespace paulipf::test
