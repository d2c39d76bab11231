#include "paulipf/circuits.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace paulipf {

namespace {
const ComplexScalar kI{0.0, 1.0};

void check_finite_params(std::initializer_list<double> vals,
                         const char* what) {
  for (double v : vals)
    if (!std::isfinite(v))
      throw Error(std::string(what) + ": parameters must be finite");
}
}  // namespace

CMatrix build_LS(const CircuitParamsS& p) {
  check_finite_params({p.alpha, p.mu, p.gamma}, "build_LS");
  const double a = p.alpha, m = p.mu, g = p.gamma;
  return CMatrix::from_rows({{0, 0, 1, 0},
                             {0, 0, 0, 1},
                             {-a, m * a, g, 0},
                             {m * a, -a, 0, -g}});
}

CMatrix h_s(const CircuitParamsS& p) { return build_LS(p) * kI; }

CMatrix build_HT(const CircuitParamsT& p) {
  check_finite_params({p.b, p.d, p.r}, "build_HT");
  const ComplexScalar bp = p.b + kI * p.r;
  const ComplexScalar dp = p.d + kI * p.r;
  const ComplexScalar dm = p.d - kI * p.r;
  CMatrix h = CMatrix::from_rows({{0, bp, dp, 0},
                                  {bp, 0, 0, dm},
                                  {dp, 0, 0, dm},
                                  {0, dm, dm, 0}});
  if (max_abs_diff(h, h.transpose()) != 0.0)
    throw Error("build_HT: matrix lost its symmetry");
  return h;
}

Trajectory evolve(const CMatrix& l, const CVector& psi0,
                  const std::vector<double>& times) {
  if (l.rows() != 4 || l.cols() != 4)
    throw DimensionMismatch("evolve: generator must be 4x4");
  if (psi0.size() != 4)
    throw DimensionMismatch("evolve: initial state must have 4 components");
  if (times.empty()) throw GridTooCoarse("evolve: empty time grid");
  if (times.front() < 0.0)
    throw Error("evolve: times must start at t >= 0");
  for (size_t i = 1; i < times.size(); ++i)
    if (!(times[i] > times[i - 1]))
      throw Error("evolve: times must be strictly increasing");

  Trajectory traj;
  traj.times = times;
  traj.states.reserve(times.size());
  for (double t : times) {
    if (t == 0.0) {
      traj.states.push_back(psi0);
      continue;
    }
    CVector state;
    try {
      state = mat_exp(l, t) * psi0;
    } catch (const OverflowError&) {
      std::ostringstream os;
      os << "evolve: blow-up at t = " << t;
      throw OverflowError(os.str());
    }
    if (!state.all_finite()) {
      std::ostringstream os;
      os << "evolve: blow-up at t = " << t;
      throw OverflowError(os.str());
    }
    traj.states.push_back(state);
  }
  return traj;
}

double derivative_check(const Trajectory& traj, const CMatrix& l) {
  const size_t n = traj.times.size();
  if (n < 3) throw GridTooCoarse("derivative_check: need at least 3 points");
  const double h = traj.times[1] - traj.times[0];
  if (h > 1e-2) throw GridTooCoarse("derivative_check: step must be <= 1e-2");
  for (size_t i = 1; i < n; ++i) {
    const double step = traj.times[i] - traj.times[i - 1];
    if (std::abs(step - h) > 1e-9 * std::max(1.0, std::abs(h)))
      throw Error("derivative_check: grid is not uniform");
  }

  double worst = 0.0;
  for (size_t i = 1; i + 1 < n; ++i) {
    const CVector fd =
        (traj.states[i + 1] - traj.states[i - 1]) * ComplexScalar(1.0 / (2 * h));
    const CVector rhs = l * traj.states[i];
    worst = std::max(worst, (fd - rhs).max_abs());
  }
  return worst;
}

void write_trajectory_csv(std::ostream& os, const Trajectory& traj) {
  os << "t,re_Q1,im_Q1,re_Q2,im_Q2,re_dQ1,im_dQ1,re_dQ2,im_dQ2\n";
  char buf[32];
  auto put = [&](double v) {
    std::snprintf(buf, sizeof buf, "%.17g", v);
    os << buf;
  };
  for (size_t i = 0; i < traj.times.size(); ++i) {
    put(traj.times[i]);
    for (int c = 0; c < 4; ++c) {
      os << ',';
      put(traj.states[i][c].real());
      os << ',';
      put(traj.states[i][c].imag());
    }
    os << '\n';
  }
}

std::array<ComplexScalar, 12> ls_x_coefficients(const CircuitParamsS& p) {
  std::array<ComplexScalar, 12> c{};
  c[0] = (1.0 - p.alpha) / 2.0;
  c[1] = kI * (1.0 + p.alpha) / 2.0;
  c[3] = p.gamma / 2.0;
  c[6] = p.alpha * p.mu / 2.0;
  c[8] = p.alpha * p.mu / (2.0 * kI);
  c[9] = -p.gamma / 2.0;
  return c;
}

std::array<ComplexScalar, 12> ht_x_coefficients(const CircuitParamsT& p) {
  std::array<ComplexScalar, 12> c{};
  c[0] = p.d;
  c[4] = (p.b + p.d) / 2.0;
  c[10] = (p.b - p.d) / 2.0 + kI * p.r;
  c[11] = kI * p.r;
  return c;
}

}  // namespace paulipf
