#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "distlat/point.hpp"

namespace distlat {

/// Small row-major dense matrix. Sizes stay in the tens, so no blocking or views.
class DenseMatrix {
 public:
  DenseMatrix(std::size_t rows, std::size_t cols, double fill = 0.0);

  /// Matrix whose i-th row is rows[i]; all rows must share a dimension.
  static DenseMatrix from_rows(std::span<const Point> rows);
  /// Matrix whose j-th column is cols[j].
  static DenseMatrix from_columns(std::span<const Point> cols);
  static DenseMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  DenseMatrix transposed() const;
  friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b);

  /// Largest absolute entrywise difference; sizes must match.
  double max_abs_difference(const DenseMatrix& other) const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> data_;
};

/// Solves A x = b by Gaussian elimination with partial pivoting.
/// Throws DegeneracyError when a pivot falls below kRankThreshold times the largest |a_ij|.
std::vector<double> solve_partial_pivot(DenseMatrix a, std::vector<double> b);

/// Determinant of a square matrix by the same elimination (0 for an exactly singular one).
double determinant(DenseMatrix a);

/// Singular values in ascending order.
std::vector<double> singular_values(const DenseMatrix& a);

/// True when the columns are linearly dependent: more columns than rows, or the smallest
/// singular value is <= kRankThreshold times the largest.
bool is_rank_deficient(const DenseMatrix& a);

}  // namespace distlat
