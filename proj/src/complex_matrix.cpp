#include "paulipf/complex_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace paulipf {

bool is_finite(ComplexScalar z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

static void check_dim(int rows, int cols) {
  if (rows < 1 || cols < 1 || rows > kMaxDim || cols > kMaxDim) {
    throw DimensionOverflow("matrix dimensions must be within 1.." +
                            std::to_string(kMaxDim));
  }
}

CMatrix::CMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  check_dim(rows, cols);
}

CMatrix CMatrix::identity(int n) {
  CMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

CMatrix CMatrix::from_rows(
    std::initializer_list<std::initializer_list<ComplexScalar>> rows) {
  const int r = static_cast<int>(rows.size());
  if (r == 0) throw DimensionOverflow("empty row list");
  const int c = static_cast<int>(rows.begin()->size());
  CMatrix m(r, c);
  int i = 0;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != c)
      throw DimensionMismatch("ragged row list");
    int j = 0;
    for (ComplexScalar z : row) {
      if (!is_finite(z)) throw OverflowError("non-finite entry in literal");
      m(i, j++) = z;
    }
    ++i;
  }
  return m;
}

CMatrix CMatrix::operator+(const CMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw DimensionMismatch("matrix addition shape mismatch");
  CMatrix r(rows_, cols_);
  for (int k = 0; k < rows_ * cols_; ++k) r.e_[k] = e_[k] + o.e_[k];
  return r;
}

CMatrix CMatrix::operator-(const CMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw DimensionMismatch("matrix subtraction shape mismatch");
  CMatrix r(rows_, cols_);
  for (int k = 0; k < rows_ * cols_; ++k) r.e_[k] = e_[k] - o.e_[k];
  return r;
}

CMatrix CMatrix::operator*(const CMatrix& o) const {
  if (cols_ != o.rows_)
    throw DimensionMismatch("matrix product shape mismatch");
  CMatrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int k = 0; k < cols_; ++k) {
      const ComplexScalar aik = (*this)(i, k);
      if (aik == 0.0) continue;
      for (int j = 0; j < o.cols_; ++j) r(i, j) += aik * o(k, j);
    }
  }
  return r;
}

CMatrix CMatrix::operator*(ComplexScalar s) const {
  CMatrix r(rows_, cols_);
  for (int k = 0; k < rows_ * cols_; ++k) r.e_[k] = e_[k] * s;
  return r;
}

CMatrix CMatrix::operator-() const { return (*this) * ComplexScalar(-1.0); }

CMatrix CMatrix::transpose() const {
  CMatrix r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

CMatrix CMatrix::conj() const {
  CMatrix r(rows_, cols_);
  for (int k = 0; k < rows_ * cols_; ++k) r.e_[k] = std::conj(e_[k]);
  return r;
}

CMatrix CMatrix::adjoint() const { return transpose().conj(); }

ComplexScalar CMatrix::trace() const {
  ComplexScalar t = 0.0;
  for (int i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

double CMatrix::max_abs() const {
  double m = 0.0;
  for (int k = 0; k < rows_ * cols_; ++k) m = std::max(m, std::abs(e_[k]));
  return m;
}

double CMatrix::frobenius_norm() const {
  double s = 0.0;
  for (int k = 0; k < rows_ * cols_; ++k) s += std::norm(e_[k]);
  return std::sqrt(s);
}

double CMatrix::inf_norm() const {
  double m = 0.0;
  for (int i = 0; i < rows_; ++i) {
    double row = 0.0;
    for (int j = 0; j < cols_; ++j) row += std::abs((*this)(i, j));
    m = std::max(m, row);
  }
  return m;
}

bool CMatrix::all_finite() const {
  for (int k = 0; k < rows_ * cols_; ++k)
    if (!is_finite(e_[k])) return false;
  return true;
}

void CMatrix::require_finite(const char* context) const {
  if (!all_finite())
    throw OverflowError(std::string(context) + ": entry left the double range");
}

bool approx_equal(const CMatrix& a, const CMatrix& b, double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  return max_abs_diff(a, b) <= tol;
}

double max_abs_diff(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionMismatch("max_abs_diff shape mismatch");
  double m = 0.0;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      m = std::max(m, std::abs(a(i, j) - b(i, j)));
  return m;
}

CVector::CVector(int n) : n_(n) {
  if (n < 1 || n > kMaxDim) throw DimensionOverflow("vector length out of range");
}

CVector::CVector(std::initializer_list<ComplexScalar> entries)
    : CVector(static_cast<int>(entries.size())) {
  int i = 0;
  for (ComplexScalar z : entries) e_[i++] = z;
}

CVector CVector::operator+(const CVector& o) const {
  if (n_ != o.n_) throw DimensionMismatch("vector addition length mismatch");
  CVector r(n_);
  for (int i = 0; i < n_; ++i) r[i] = e_[i] + o.e_[i];
  return r;
}

CVector CVector::operator-(const CVector& o) const {
  if (n_ != o.n_) throw DimensionMismatch("vector subtraction length mismatch");
  CVector r(n_);
  for (int i = 0; i < n_; ++i) r[i] = e_[i] - o.e_[i];
  return r;
}

CVector CVector::operator*(ComplexScalar s) const {
  CVector r(n_);
  for (int i = 0; i < n_; ++i) r[i] = e_[i] * s;
  return r;
}

double CVector::norm() const {
  double s = 0.0;
  for (int i = 0; i < n_; ++i) s += std::norm(e_[i]);
  return std::sqrt(s);
}

double CVector::max_abs() const {
  double m = 0.0;
  for (int i = 0; i < n_; ++i) m = std::max(m, std::abs(e_[i]));
  return m;
}

bool CVector::all_finite() const {
  for (int i = 0; i < n_; ++i)
    if (!is_finite(e_[i])) return false;
  return true;
}

CVector operator*(const CMatrix& m, const CVector& v) {
  if (m.cols() != v.size())
    throw DimensionMismatch("matrix-vector shape mismatch");
  CVector r(m.rows());
  for (int i = 0; i < m.rows(); ++i) {
    ComplexScalar s = 0.0;
    for (int j = 0; j < m.cols(); ++j) s += m(i, j) * v[j];
    r[i] = s;
  }
  return r;
}

ComplexScalar inner(const CVector& u, const CVector& v) {
  if (u.size() != v.size()) throw DimensionMismatch("inner length mismatch");
  ComplexScalar s = 0.0;
  for (int i = 0; i < u.size(); ++i) s += std::conj(u[i]) * v[i];
  return s;
}

CMatrix outer(const CVector& u, const CVector& v) {
  CMatrix m(u.size(), v.size());
  for (int i = 0; i < u.size(); ++i)
    for (int j = 0; j < v.size(); ++j) m(i, j) = u[i] * std::conj(v[j]);
  return m;
}

double max_abs_diff(const CVector& a, const CVector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector diff mismatch");
  double m = 0.0;
  for (int i = 0; i < a.size(); ++i)
    m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  const int r = a.rows() * b.rows();
  const int c = a.cols() * b.cols();
  if (r > kMaxDim || c > kMaxDim)
    throw DimensionOverflow("Kronecker product exceeds the 8x8 cap");
  CMatrix m(r, c);
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      const ComplexScalar aij = a(i, j);
      for (int p = 0; p < b.rows(); ++p)
        for (int q = 0; q < b.cols(); ++q)
          m(i * b.rows() + p, j * b.cols() + q) = aij * b(p, q);
    }
  return m;
}

static void require_same_square(const CMatrix& a, const CMatrix& b,
                                const char* what) {
  if (!a.is_square() || !b.is_square() || a.rows() != b.rows())
    throw DimensionMismatch(std::string(what) +
                            " requires equal square matrices");
}

CMatrix commutator(const CMatrix& a, const CMatrix& b) {
  require_same_square(a, b, "commutator");
  return a * b - b * a;
}

CMatrix anticommutator(const CMatrix& a, const CMatrix& b) {
  require_same_square(a, b, "anticommutator");
  return a * b + b * a;
}

CMatrix mat_exp(const CMatrix& a, double t) {
  if (!a.is_square()) throw DimensionMismatch("mat_exp needs a square matrix");
  if (!std::isfinite(t)) throw OverflowError("mat_exp: non-finite time");
  const int n = a.rows();
  CMatrix b = a * ComplexScalar(t);
  b.require_finite("mat_exp scaling");

  // Scale so the Taylor series converges fast, then square back.
  int squarings = 0;
  double nrm = b.inf_norm();
  while (nrm > 0.5 && squarings < 64) {
    nrm *= 0.5;
    ++squarings;
  }
  if (nrm > 0.5) throw OverflowError("mat_exp: norm too large to scale");
  b = b * ComplexScalar(std::ldexp(1.0, -squarings));

  CMatrix result = CMatrix::identity(n);
  CMatrix term = CMatrix::identity(n);
  for (int k = 1; k <= 40; ++k) {
    term = term * b * ComplexScalar(1.0 / k);
    result = result + term;
    if (term.max_abs() <= 1e-18 * std::max(1.0, result.max_abs())) break;
  }
  for (int s = 0; s < squarings; ++s) {
    result = result * result;
    result.require_finite("mat_exp squaring");
  }
  result.require_finite("mat_exp");
  return result;
}

CMatrix inverse(const CMatrix& a) {
  if (!a.is_square()) throw DimensionMismatch("inverse needs a square matrix");
  const int n = a.rows();
  CMatrix work = a;
  CMatrix inv = CMatrix::identity(n);
  for (int col = 0; col < n; ++col) {
    int piv = col;
    for (int i = col + 1; i < n; ++i)
      if (std::abs(work(i, col)) > std::abs(work(piv, col))) piv = i;
    if (std::abs(work(piv, col)) < 1e-300)
      throw SingularMatrix("inverse: singular matrix");
    if (piv != col) {
      for (int j = 0; j < n; ++j) {
        std::swap(work(piv, j), work(col, j));
        std::swap(inv(piv, j), inv(col, j));
      }
    }
    const ComplexScalar d = work(col, col);
    for (int j = 0; j < n; ++j) {
      work(col, j) /= d;
      inv(col, j) /= d;
    }
    for (int i = 0; i < n; ++i) {
      if (i == col) continue;
      const ComplexScalar f = work(i, col);
      if (f == 0.0) continue;
      for (int j = 0; j < n; ++j) {
        work(i, j) -= f * work(col, j);
        inv(i, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

SpanDecomposition span_decompose(const std::vector<CMatrix>& basis,
                                 const CMatrix& target) {
  if (basis.empty()) throw DimensionMismatch("span_decompose: empty basis");
  const int n = target.rows();
  if (!target.is_square())
    throw DimensionMismatch("span_decompose: target must be square");
  for (const CMatrix& b : basis)
    if (!b.is_square() || b.rows() != n)
      throw DimensionMismatch("span_decompose: basis dimension mismatch");

  const int m = n * n;
  const int k = static_cast<int>(basis.size());
  // Column j of A is vec(basis[j]); rhs is vec(target).
  std::vector<ComplexScalar> A(static_cast<size_t>(m) * k);
  std::vector<ComplexScalar> rhs(m);
  for (int j = 0; j < k; ++j)
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c)
        A[static_cast<size_t>(r * n + c) * k + j] = basis[j](r, c);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) rhs[r * n + c] = target(r, c);

  auto at = [&](int i, int j) -> ComplexScalar& {
    return A[static_cast<size_t>(i) * k + j];
  };

  // Householder QR, applying reflectors to rhs as we go.
  std::vector<double> rdiag(k, 0.0);
  for (int j = 0; j < std::min(m, k); ++j) {
    double colnorm = 0.0;
    for (int i = j; i < m; ++i) colnorm += std::norm(at(i, j));
    colnorm = std::sqrt(colnorm);
    rdiag[j] = colnorm;
    if (colnorm < 1e-300) continue;
    ComplexScalar alpha = at(j, j);
    const double aabs = std::abs(alpha);
    const ComplexScalar phase = aabs > 0 ? alpha / aabs : ComplexScalar(1.0);
    // v = x + phase*||x|| e_j
    std::vector<ComplexScalar> v(m - j);
    for (int i = j; i < m; ++i) v[i - j] = at(i, j);
    v[0] += phase * colnorm;
    double vnorm2 = 0.0;
    for (const auto& z : v) vnorm2 += std::norm(z);
    if (vnorm2 < 1e-300) continue;
    auto apply = [&](auto&& access) {
      ComplexScalar dot = 0.0;
      for (int i = j; i < m; ++i) dot += std::conj(v[i - j]) * access(i);
      const ComplexScalar f = 2.0 * dot / vnorm2;
      for (int i = j; i < m; ++i) access(i) -= f * v[i - j];
    };
    for (int col = j; col < k; ++col)
      apply([&](int i) -> ComplexScalar& { return at(i, col); });
    apply([&](int i) -> ComplexScalar& { return rhs[i]; });
  }

  // Back-substitution on the triangular factor; near-zero diagonals mean a
  // dependent basis column and get a zero coefficient.
  SpanDecomposition out;
  out.coefficients.assign(k, ComplexScalar(0.0));
  double scale = 0.0;
  for (double d : rdiag) scale = std::max(scale, d);
  for (int j = std::min(m, k) - 1; j >= 0; --j) {
    ComplexScalar s = rhs[j];
    for (int c = j + 1; c < k; ++c) s -= at(j, c) * out.coefficients[c];
    const ComplexScalar d = at(j, j);
    out.coefficients[j] =
        (std::abs(d) > 1e-12 * std::max(1.0, scale)) ? s / d : 0.0;
  }

  CMatrix recon(n, n);
  for (int j = 0; j < k; ++j)
    recon = recon + basis[j] * out.coefficients[j];
  out.residual = (recon - target).frobenius_norm();
  return out;
}

HermitianEigen hermitian_eigen(const CMatrix& a) {
  if (!a.is_square())
    throw DimensionMismatch("hermitian_eigen needs a square matrix");
  const int n = a.rows();
  CMatrix h = (a + a.adjoint()) * ComplexScalar(0.5);
  CMatrix v = CMatrix::identity(n);

  for (int sweep = 0; sweep < 60; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off = std::max(off, std::abs(h(p, q)));
    if (off < 1e-15 * std::max(1.0, h.max_abs())) break;

    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const ComplexScalar apq = h(p, q);
        const double mag = std::abs(apq);
        if (mag < 1e-300) continue;
        const ComplexScalar phase = apq / mag;
        const double app = h(p, p).real();
        const double aqq = h(q, q).real();
        const double tau = (aqq - app) / (2.0 * mag);
        const double tt = (tau >= 0 ? 1.0 : -1.0) /
                          (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + tt * tt);
        const ComplexScalar s = tt * c * phase;
        // Right-multiply columns p,q of h and v by the rotation, then
        // left-multiply rows by its adjoint.
        for (int i = 0; i < n; ++i) {
          const ComplexScalar hip = h(i, p), hiq = h(i, q);
          h(i, p) = c * hip - std::conj(s) * hiq;
          h(i, q) = s * hip + c * hiq;
          const ComplexScalar vip = v(i, p), viq = v(i, q);
          v(i, p) = c * vip - std::conj(s) * viq;
          v(i, q) = s * vip + c * viq;
        }
        for (int j = 0; j < n; ++j) {
          const ComplexScalar hpj = h(p, j), hqj = h(q, j);
          h(p, j) = c * hpj - s * hqj;
          h(q, j) = std::conj(s) * hpj + c * hqj;
        }
        h(p, q) = 0.0;
        h(q, p) = 0.0;
      }
    }
  }

  // Sort eigenpairs ascending.
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](int x, int y) { return h(x, x).real() < h(y, y).real(); });
  HermitianEigen out;
  out.values.resize(n);
  out.vectors = CMatrix(n, n);
  for (int j = 0; j < n; ++j) {
    out.values[j] = h(order[j], order[j]).real();
    for (int i = 0; i < n; ++i) out.vectors(i, j) = v(i, order[j]);
  }
  return out;
}

CMatrix psd_sqrt(const CMatrix& s) {
  if (!s.is_square()) throw DimensionMismatch("psd_sqrt needs a square matrix");
  if (max_abs_diff(s, s.adjoint()) > 1e-10)
    throw NotHermitian("psd_sqrt: matrix is not Hermitian");
  const int n = s.rows();

  if (n == 1) {
    const double x = s(0, 0).real();
    if (x <= 1e-12) throw NotPositiveDefinite("psd_sqrt: eigenvalue <= 1e-12");
    CMatrix r(1, 1);
    r(0, 0) = std::sqrt(x);
    return r;
  }
  if (n == 2) {
    const double tr = s.trace().real();
    const double det = (s(0, 0) * s(1, 1) - s(0, 1) * s(1, 0)).real();
    const double disc = std::sqrt(std::max(0.0, tr * tr / 4.0 - det));
    const double lmin = tr / 2.0 - disc;
    if (lmin <= 1e-12) throw NotPositiveDefinite("psd_sqrt: eigenvalue <= 1e-12");
    const double sd = std::sqrt(det);
    const double denom = std::sqrt(tr + 2.0 * sd);
    CMatrix r = (s + CMatrix::identity(2) * ComplexScalar(sd)) *
                ComplexScalar(1.0 / denom);
    return (r + r.adjoint()) * ComplexScalar(0.5);
  }

  HermitianEigen eig = hermitian_eigen(s);
  for (double lambda : eig.values)
    if (lambda <= 1e-12)
      throw NotPositiveDefinite("psd_sqrt: eigenvalue <= 1e-12");
  CMatrix d(n, n);
  for (int i = 0; i < n; ++i) d(i, i) = std::sqrt(eig.values[i]);
  CMatrix r = eig.vectors * d * eig.vectors.adjoint();
  return (r + r.adjoint()) * ComplexScalar(0.5);
}

std::array<ComplexScalar, 2> eigenvalues_2x2(const CMatrix& a) {
  if (a.rows() != 2 || a.cols() != 2)
    throw DimensionMismatch("eigenvalues_2x2 needs a 2x2 matrix");
  const ComplexScalar tr = a(0, 0) + a(1, 1);
  const ComplexScalar det = a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
  const ComplexScalar disc = std::sqrt(tr * tr - 4.0 * det);
  return {(tr - disc) / 2.0, (tr + disc) / 2.0};
}

double spectral_norm(const CMatrix& a) {
  HermitianEigen eig = hermitian_eigen(a.adjoint() * a);
  double lmax = 0.0;
  for (double l : eig.values) lmax = std::max(lmax, l);
  return std::sqrt(std::max(0.0, lmax));
}

}  // namespace paulipf
