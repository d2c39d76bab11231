#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "paulipf/complex_matrix.hpp"
#include "paulipf/errors.hpp"

namespace paulipf {

/// Rational number with 64-bit numerator/denominator, kept in lowest terms
/// with a positive denominator. Intermediates run through 128-bit integers
/// and throw ExactOverflow if a reduced value no longer fits.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t n) : num_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t num, std::int64_t den);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  Rational operator/(const Rational& o) const;
  Rational operator-() const;
  bool operator==(const Rational& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const Rational& o) const { return !(*this == o); }

  double to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }
  std::string to_string() const;

 private:
  static Rational reduce(__int128 num, __int128 den);
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// Gaussian rational: exact complex number with rational components.
struct ExactComplex {
  Rational re, im;

  ExactComplex() = default;
  ExactComplex(Rational r) : re(r) {}  // NOLINT(google-explicit-constructor)
  ExactComplex(Rational r, Rational i) : re(r), im(i) {}

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  ExactComplex operator+(const ExactComplex& o) const;
  ExactComplex operator-(const ExactComplex& o) const;
  ExactComplex operator*(const ExactComplex& o) const;
  ExactComplex operator/(const ExactComplex& o) const;
  ExactComplex operator-() const;
  ExactComplex conj() const { return {re, -im}; }
  bool operator==(const ExactComplex& o) const {
    return re == o.re && im == o.im;
  }
  bool operator!=(const ExactComplex& o) const { return !(*this == o); }

  ComplexScalar to_complex() const {
    return {re.to_double(), im.to_double()};
  }
  std::string to_string() const;
};

inline ExactComplex exact_i() { return {Rational(0), Rational(1)}; }

/// Dense matrix over Gaussian rationals; dynamically sized because the
/// stacked commutant systems reach 192x16.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(int rows, int cols);

  static ExactMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  ExactComplex& operator()(int i, int j) { return e_[i * cols_ + j]; }
  const ExactComplex& operator()(int i, int j) const {
    return e_[i * cols_ + j];
  }

  ExactMatrix operator+(const ExactMatrix& o) const;
  ExactMatrix operator-(const ExactMatrix& o) const;
  ExactMatrix operator*(const ExactMatrix& o) const;
  ExactMatrix transpose() const;
  bool operator==(const ExactMatrix& o) const;
  bool is_zero() const;

  CMatrix to_cmatrix() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<ExactComplex> e_;
};

/// Basis of the right null space { x : M x = 0 }.
///
/// Forward pass is fraction-free (Bareiss) so Gaussian-integer input never
/// leaves the integers; the basis itself is recovered by exact rational
/// back-substitution. Basis size is exactly cols - rank. A zero-row system
/// (rows == 0) returns the full standard basis.
std::vector<std::vector<ExactComplex>> null_space(const ExactMatrix& m);

int exact_rank(const ExactMatrix& m);

}  // namespace paulipf
