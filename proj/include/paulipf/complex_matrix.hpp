#pragma once

#include <array>
#include <complex>
#include <initializer_list>
#include <vector>

#include "paulipf/errors.hpp"

namespace paulipf {

using ComplexScalar = std::complex<double>;

/// Hard cap on matrix dimensions. Everything in this project lives in
/// dimension 2 or 4; the cap keeps storage fixed and allocation-free.
inline constexpr int kMaxDim = 8;

/// Default per-entry absolute tolerance for floating comparisons.
inline constexpr double kEntryTol = 1e-12;

bool is_finite(ComplexScalar z);

/// Dense complex matrix of size at most kMaxDim x kMaxDim, value type.
///
/// Entries are stored row-major in a fixed array. All arithmetic returns
/// fresh values; nothing here mutates shared state.
class CMatrix {
 public:
  CMatrix() = default;
  CMatrix(int rows, int cols);  // zero-filled

  static CMatrix identity(int n);
  /// Builds from nested row lists; throws if rows are ragged or oversized.
  static CMatrix from_rows(
      std::initializer_list<std::initializer_list<ComplexScalar>> rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  ComplexScalar& operator()(int i, int j) { return e_[i * cols_ + j]; }
  const ComplexScalar& operator()(int i, int j) const {
    return e_[i * cols_ + j];
  }

  CMatrix operator+(const CMatrix& o) const;
  CMatrix operator-(const CMatrix& o) const;
  CMatrix operator*(const CMatrix& o) const;
  CMatrix operator*(ComplexScalar s) const;
  CMatrix operator-() const;

  CMatrix transpose() const;
  CMatrix conj() const;
  CMatrix adjoint() const;

  ComplexScalar trace() const;

  /// Largest entry magnitude.
  double max_abs() const;
  double frobenius_norm() const;
  /// Induced infinity norm (max absolute row sum); used for exp scaling.
  double inf_norm() const;

  bool all_finite() const;
  /// Throws OverflowError if any entry is NaN or infinite.
  void require_finite(const char* context) const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::array<ComplexScalar, kMaxDim * kMaxDim> e_{};
};

inline CMatrix operator*(ComplexScalar s, const CMatrix& m) { return m * s; }

/// Entrywise comparison with absolute tolerance (default 1e-12).
bool approx_equal(const CMatrix& a, const CMatrix& b, double tol = kEntryTol);
double max_abs_diff(const CMatrix& a, const CMatrix& b);

/// Complex column vector of length at most kMaxDim.
class CVector {
 public:
  CVector() = default;
  explicit CVector(int n);
  CVector(std::initializer_list<ComplexScalar> entries);

  int size() const { return n_; }
  ComplexScalar& operator[](int i) { return e_[i]; }
  const ComplexScalar& operator[](int i) const { return e_[i]; }

  CVector operator+(const CVector& o) const;
  CVector operator-(const CVector& o) const;
  CVector operator*(ComplexScalar s) const;

  double norm() const;
  double max_abs() const;
  bool all_finite() const;

 private:
  int n_ = 0;
  std::array<ComplexScalar, kMaxDim> e_{};
};

CVector operator*(const CMatrix& m, const CVector& v);

/// Scalar product, antilinear in the FIRST argument: <u,v> = sum conj(u_i) v_i.
/// This convention is fixed project-wide.
ComplexScalar inner(const CVector& u, const CVector& v);

/// Rank-one operator |u><v|: (outer(u,v)) f = <v,f> u.
CMatrix outer(const CVector& u, const CVector& v);

double max_abs_diff(const CVector& a, const CVector& b);

// -- operations ---------------------------------------------------------------

/// Kronecker product; block (i,j) equals A(i,j) * B.
/// Throws DimensionOverflow when the result would exceed kMaxDim.
CMatrix kron(const CMatrix& a, const CMatrix& b);

/// AB - BA. Throws DimensionMismatch unless both are square of equal size.
CMatrix commutator(const CMatrix& a, const CMatrix& b);

/// AB + BA. Throws DimensionMismatch unless both are square of equal size.
CMatrix anticommutator(const CMatrix& a, const CMatrix& b);

/// exp(A t) by scaling-and-squaring with a Taylor kernel.
///
/// No eigendecomposition is assumed; the generators handled here are
/// generally non-normal. Throws OverflowError if entries leave the double
/// range (possible for gain-dominated generators at large t).
CMatrix mat_exp(const CMatrix& a, double t);

/// Inverse by Gauss-Jordan elimination with partial pivoting.
CMatrix inverse(const CMatrix& a);

struct SpanDecomposition {
  std::vector<ComplexScalar> coefficients;
  double residual = 0.0;  // Frobenius norm of (sum c_k B_k - target)
};

/// Least-squares coefficients minimizing ||sum c_k basis_k - target||_F,
/// via Householder QR on the vectorized system. The reported residual is
/// recomputed from the reconstruction, not inferred from the factorization.
SpanDecomposition span_decompose(const std::vector<CMatrix>& basis,
                                 const CMatrix& target);

struct HermitianEigen {
  std::vector<double> values;  // ascending
  CMatrix vectors;             // columns are eigenvectors
};

/// Cyclic Jacobi diagonalization for complex Hermitian matrices (n <= 8).
HermitianEigen hermitian_eigen(const CMatrix& a);

/// Principal square root of a Hermitian positive-definite matrix.
///
/// Dimension 2 uses the closed form (S + sqrt(det) I)/sqrt(tr + 2 sqrt(det));
/// larger sizes go through the spectral decomposition. Throws NotHermitian
/// when max|S - S*| > 1e-10 and NotPositiveDefinite when an eigenvalue
/// is <= 1e-12.
CMatrix psd_sqrt(const CMatrix& s);

/// Eigenvalues of a general (possibly non-Hermitian) 2x2 matrix.
std::array<ComplexScalar, 2> eigenvalues_2x2(const CMatrix& a);

/// Spectral norm; the matrix must be small enough for hermitian_eigen(A*A).
double spectral_norm(const CMatrix& a);

}  // namespace paulipf
