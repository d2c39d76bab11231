#include "paulipf/exact.hpp"


namespace paulipf {

namespace {

__int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

constexpr __int128 kInt64Max = INT64_MAX;
constexpr __int128 kInt64Min = INT64_MIN;

}  // namespace

Rational Rational::reduce(__int128 num, __int128 den) {
  if (den == 0) throw ExactOverflow("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (num == 0) return Rational();
  const __int128 g = gcd128(num, den);
  num /= g;
  den /= g;
  if (num > kInt64Max || num < kInt64Min || den > kInt64Max)
    throw ExactOverflow("rational exceeded 64-bit range");
  Rational r;
  r.num_ = static_cast<std::int64_t>(num);
  r.den_ = static_cast<std::int64_t>(den);
  return r;
}

Rational::Rational(std::int64_t num, std::int64_t den) {
  *this = reduce(num, den);
}

Rational Rational::operator+(const Rational& o) const {
  return reduce(static_cast<__int128>(num_) * o.den_ +
                    static_cast<__int128>(o.num_) * den_,
                static_cast<__int128>(den_) * o.den_);
}

Rational Rational::operator-(const Rational& o) const {
  return reduce(static_cast<__int128>(num_) * o.den_ -
                    static_cast<__int128>(o.num_) * den_,
                static_cast<__int128>(den_) * o.den_);
}

Rational Rational::operator*(const Rational& o) const {
  return reduce(static_cast<__int128>(num_) * o.num_,
                static_cast<__int128>(den_) * o.den_);
}

Rational Rational::operator/(const Rational& o) const {
  if (o.num_ == 0) throw ExactOverflow("rational division by zero");
  return reduce(static_cast<__int128>(num_) * o.den_,
                static_cast<__int128>(den_) * o.num_);
}

Rational Rational::operator-() const {
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

ExactComplex ExactComplex::operator+(const ExactComplex& o) const {
  return {re + o.re, im + o.im};
}

ExactComplex ExactComplex::operator-(const ExactComplex& o) const {
  return {re - o.re, im - o.im};
}

ExactComplex ExactComplex::operator*(const ExactComplex& o) const {
  return {re * o.re - im * o.im, re * o.im + im * o.re};
}

ExactComplex ExactComplex::operator/(const ExactComplex& o) const {
  const Rational n2 = o.re * o.re + o.im * o.im;
  if (n2.is_zero()) throw ExactOverflow("exact complex division by zero");
  const ExactComplex num = (*this) * o.conj();
  return {num.re / n2, num.im / n2};
}

ExactComplex ExactComplex::operator-() const { return {-re, -im}; }

std::string ExactComplex::to_string() const {
  if (im.is_zero()) return re.to_string();
  if (re.is_zero()) return im.to_string() + "i";
  std::string s = re.to_string();
  if (im.num() > 0) s += "+";
  return s + im.to_string() + "i";
}

ExactMatrix::ExactMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols) {
  if (rows < 0 || cols < 1)
    throw DimensionMismatch("exact matrix needs rows >= 0, cols >= 1");
}

ExactMatrix ExactMatrix::identity(int n) {
  ExactMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = Rational(1);
  return m;
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw DimensionMismatch("exact matrix addition shape mismatch");
  ExactMatrix r(rows_, cols_);
  for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] + o.e_[k];
  return r;
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw DimensionMismatch("exact matrix subtraction shape mismatch");
  ExactMatrix r(rows_, cols_);
  for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] - o.e_[k];
  return r;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const {
  if (cols_ != o.rows_)
    throw DimensionMismatch("exact matrix product shape mismatch");
  ExactMatrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const ExactComplex& aik = (*this)(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j)
        r(i, j) = r(i, j) + aik * o(k, j);
    }
  return r;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

bool ExactMatrix::operator==(const ExactMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
}

bool ExactMatrix::is_zero() const {
  for (const auto& z : e_)
    if (!z.is_zero()) return false;
  return true;
}

CMatrix ExactMatrix::to_cmatrix() const {
  CMatrix m(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j).to_complex();
  return m;
}

std::vector<std::vector<ExactComplex>> null_space(const ExactMatrix& m) {
  const int rows = m.rows();
  const int cols = m.cols();

  ExactMatrix w = m;
  // Fraction-free (Bareiss) forward elimination with column pivot tracking:
  // each step divides exactly by the previous pivot, so integer input stays
  // integer throughout.
  std::vector<int> pivot_col;  // pivot_col[r] = column of pivot in row r
  ExactComplex prev_pivot(Rational(1));
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i) {
      if (!w(i, c).is_zero()) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = 0; j < cols; ++j) std::swap(w(piv, j), w(r, j));
    for (int i = r + 1; i < rows; ++i) {
      for (int j = c + 1; j < cols; ++j)
        w(i, j) = (w(r, c) * w(i, j) - w(i, c) * w(r, j)) / prev_pivot;
      w(i, c) = ExactComplex();
    }
    prev_pivot = w(r, c);
    pivot_col.push_back(c);
    ++r;
  }
  const int rank = r;

  std::vector<bool> is_pivot(cols, false);
  for (int c : pivot_col) is_pivot[c] = true;

  std::vector<std::vector<ExactComplex>> basis;
  for (int f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<ExactComplex> x(cols);
    x[f] = ExactComplex(Rational(1));
    for (int i = rank - 1; i >= 0; --i) {
      const int pc = pivot_col[i];
      ExactComplex s;
      for (int j = pc + 1; j < cols; ++j) {
        if (!x[j].is_zero() && !w(i, j).is_zero())
          s = s + w(i, j) * x[j];
      }
      x[pc] = -s / w(i, pc);
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

int exact_rank(const ExactMatrix& m) {
  return m.cols() - static_cast<int>(null_space(m).size());
}

}  // namespace paulipf
