#include "wtpr/complex_matrix.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace wtpr {

ComplexMatrix::ComplexMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows * cols), cplx{}) {
  if (rows <= 0 || cols <= 0) throw std::invalid_argument("ComplexMatrix: dimensions must be positive");
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<cplx>> rows) {
  rows_ = static_cast<int>(rows.size());
  cols_ = rows_ > 0 ? static_cast<int>(rows.begin()->size()) : 0;
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != cols_) throw std::invalid_argument("ComplexMatrix: ragged initializer");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

ComplexMatrix ComplexMatrix::identity(int n) {
  ComplexMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::block_diagonal(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix m(a.rows_ + b.rows_, a.cols_ + b.cols_);
  for (int r = 0; r < a.rows_; ++r)
    for (int c = 0; c < a.cols_; ++c) m(r, c) = a(r, c);
  for (int r = 0; r < b.rows_; ++r)
    for (int c = 0; c < b.cols_; ++c) m(a.rows_ + r, a.cols_ + c) = b(r, c);
  return m;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

ComplexMatrix ComplexMatrix::submatrix(int r0, int nr, std::initializer_list<int> cols) const {
  ComplexMatrix s(nr, static_cast<int>(cols.size()));
  for (int r = 0; r < nr; ++r) {
    int k = 0;
    for (int c : cols) s(r, k++) = (*this)(r0 + r, c);
  }
  return s;
}

double ComplexMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const auto& v : data_) s += std::norm(v);
  return std::sqrt(s);
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const auto& v : data_) m = std::max(m, std::abs(v));
  return m;
}

double ComplexMatrix::norm1() const {
  double best = 0.0;
  for (int c = 0; c < cols_; ++c) {
    double s = 0.0;
    for (int r = 0; r < rows_; ++r) s += std::abs((*this)(r, c));
    best = std::max(best, s);
  }
  return best;
}

struct ComplexMatrix::LU {
  ComplexMatrix lu;
  std::vector<int> perm;
  int sign = 1;
  bool singular = false;

  std::vector<cplx> solve(std::vector<cplx> rhs) const {
    const int n = lu.rows();
    std::vector<cplx> x(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) x[i] = rhs[perm[i]];
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < i; ++k) x[i] -= lu(i, k) * x[k];
    for (int i = n - 1; i >= 0; --i) {
      for (int k = i + 1; k < n; ++k) x[i] -= lu(i, k) * x[k];
      x[i] /= lu(i, i);
    }
    return x;
  }
};

ComplexMatrix::LU ComplexMatrix::factor() const {
  if (rows_ != cols_) throw std::invalid_argument("ComplexMatrix: LU of a non-square matrix");
  LU f{*this, {}, 1, false};
  const int n = rows_;
  f.perm.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) f.perm[i] = i;
  for (int k = 0; k < n; ++k) {
    int pivot = k;
    for (int r = k + 1; r < n; ++r)
      if (std::abs(f.lu(r, k)) > std::abs(f.lu(pivot, k))) pivot = r;
    if (f.lu(pivot, k) == cplx{}) {
      f.singular = true;
      return f;
    }
    if (pivot != k) {
      for (int c = 0; c < n; ++c) std::swap(f.lu(k, c), f.lu(pivot, c));
      std::swap(f.perm[k], f.perm[pivot]);
      f.sign = -f.sign;
    }
    for (int r = k + 1; r < n; ++r) {
      f.lu(r, k) /= f.lu(k, k);
      for (int c = k + 1; c < n; ++c) f.lu(r, c) -= f.lu(r, k) * f.lu(k, c);
    }
  }
  return f;
}

ComplexMatrix ComplexMatrix::raw_inverse(const LU& lu) const {
  const int n = rows_;
  ComplexMatrix inv(n, n);
  for (int c = 0; c < n; ++c) {
    std::vector<cplx> e(static_cast<std::size_t>(n), cplx{});
    e[c] = 1.0;
    const auto x = lu.solve(std::move(e));
    for (int r = 0; r < n; ++r) inv(r, c) = x[r];
  }
  return inv;
}

cplx ComplexMatrix::determinant() const {
  const LU f = factor();
  if (f.singular) return {};
  cplx d = static_cast<double>(f.sign);
  for (int i = 0; i < rows_; ++i) d *= f.lu(i, i);
  return d;
}

double ComplexMatrix::condition() const {
  const LU f = factor();
  if (f.singular) return std::numeric_limits<double>::infinity();
  return norm1() * raw_inverse(f).norm1();
}

ComplexMatrix ComplexMatrix::inverse() const {
  const LU f = factor();
  if (f.singular) {
    throw conditioning_error("ComplexMatrix: singular matrix", std::numeric_limits<double>::infinity());
  }
  ComplexMatrix x = raw_inverse(f);
  const double cond = norm1() * x.norm1();
  if (!(cond <= kMaxCondition)) {
    throw conditioning_error("ComplexMatrix: condition number " + std::to_string(cond) + " exceeds 1e12", cond);
  }
  // one refinement step: X += LU^-1 (I - A X)
  const ComplexMatrix residual = identity(rows_) - (*this) * x;
  for (int c = 0; c < cols_; ++c) {
    std::vector<cplx> col(static_cast<std::size_t>(rows_));
    for (int r = 0; r < rows_; ++r) col[r] = residual(r, c);
    const auto dx = f.solve(std::move(col));
    for (int r = 0; r < rows_; ++r) x(r, c) += dx[r];
  }
  return x;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx s) {
  for (auto& v : data_) v *= s;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("ComplexMatrix: dimension mismatch in product");
  ComplexMatrix m(a.rows_, b.cols_);
  for (int r = 0; r < a.rows_; ++r)
    for (int c = 0; c < b.cols_; ++c) {
      cplx s{};
      for (int k = 0; k < a.cols_; ++k) s += a(r, k) * b(k, c);
      m(r, c) = s;
    }
  return m;
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("ComplexMatrix: dimension mismatch");
  ComplexMatrix m = a;
  for (std::size_t i = 0; i < m.data_.size(); ++i) m.data_[i] += b.data_[i];
  return m;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
  return a + (-1.0) * b;
}

}  // namespace wtpr
