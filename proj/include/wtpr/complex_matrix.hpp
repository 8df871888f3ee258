#pragma once

#include <initializer_list>
#include <vector>

#include "wtpr/common.hpp"

namespace wtpr {

/// Small dense complex matrix, row-major.
///
/// Sized for the 2x2 and 4x4 intersection and period matrices (plus the 2x4
/// basis-change rows that connect them). inverse() uses LU with partial
/// pivoting followed by one step of iterative refinement, and refuses to
/// invert when the 1-norm condition number exceeds kMaxCondition.
class ComplexMatrix {
 public:
  static constexpr double kMaxCondition = 1e12;

  ComplexMatrix() = default;
  ComplexMatrix(int rows, int cols);
  ComplexMatrix(std::initializer_list<std::initializer_list<cplx>> rows);

  static ComplexMatrix identity(int n);
  /// Block-diagonal [[a, 0], [0, b]].
  static ComplexMatrix block_diagonal(const ComplexMatrix& a, const ComplexMatrix& b);

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }

  cplx& operator()(int r, int c) { return data_[static_cast<std::size_t>(r * cols_ + c)]; }
  const cplx& operator()(int r, int c) const { return data_[static_cast<std::size_t>(r * cols_ + c)]; }

  ComplexMatrix transpose() const;
  /// Rows [r0, r0+nr) and columns listed in `cols`.
  ComplexMatrix submatrix(int r0, int nr, std::initializer_list<int> cols) const;

  double frobenius_norm() const;
  double max_abs() const;
  double norm1() const;

  cplx determinant() const;
  /// 1-norm condition number ||A||_1 ||A^-1||_1 (exact for these sizes).
  double condition() const;
  ComplexMatrix inverse() const;

  ComplexMatrix& operator*=(cplx s);
  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator*(cplx s, ComplexMatrix a) { return a *= s; }

 private:
  struct LU;
  LU factor() const;
  ComplexMatrix raw_inverse(const LU& lu) const;

  int rows_ = 0;
  int cols_ = 0;
  std::vector<cplx> data_;
};

}  // namespace wtpr
