#include "distlat/dense.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <utility>

#include "distlat/errors.hpp"
#include "distlat/numeric.hpp"

namespace distlat {

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols, double fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

DenseMatrix DenseMatrix::from_rows(std::span<const Point> rows) {
  if (rows.empty()) throw ContractViolation("DenseMatrix::from_rows: no rows");
  DenseMatrix m(rows.size(), rows.front().dim());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].dim() != m.cols_) throw ContractViolation("DenseMatrix::from_rows: ragged rows");
    for (std::size_t c = 0; c < m.cols_; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

DenseMatrix DenseMatrix::from_columns(std::span<const Point> cols) {
  return from_rows(cols).transposed();
}

DenseMatrix DenseMatrix::identity(std::size_t n) {
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

DenseMatrix DenseMatrix::transposed() const {
  DenseMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.cols_ != b.rows_) throw ContractViolation("DenseMatrix product: inner sizes differ");
  DenseMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const double aik = a(i, k);
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

double DenseMatrix::max_abs_difference(const DenseMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw ContractViolation("DenseMatrix::max_abs_difference: sizes differ");
  double worst = 0.0;
  for (std::size_t i = 0; i < data_.size(); ++i)
    worst = std::max(worst, std::abs(data_[i] - other.data_[i]));
  return worst;
}

namespace {

// In-place forward elimination; returns the sign of the row permutation, or 0 if singular.
int eliminate(DenseMatrix& a, std::vector<double>* rhs) {
  const std::size_t n = a.rows();
  double scale = 0.0;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) scale = std::max(scale, std::abs(a(r, c)));
  if (scale == 0.0) return 0;

  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    for (std::size_t r = k + 1; r < n; ++r)
      if (std::abs(a(r, k)) > std::abs(a(pivot, k))) pivot = r;
    if (std::abs(a(pivot, k)) <= kRankThreshold * scale) return 0;
    if (pivot != k) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(pivot, c));
      if (rhs != nullptr) std::swap((*rhs)[k], (*rhs)[pivot]);
      sign = -sign;
    }
    for (std::size_t r = k + 1; r < n; ++r) {
      const double factor = a(r, k) / a(k, k);
      if (factor == 0.0) continue;
      for (std::size_t c = k; c < n; ++c) a(r, c) -= factor * a(k, c);
      if (rhs != nullptr) (*rhs)[r] -= factor * (*rhs)[k];
    }
  }
  return sign;
}

}  // namespace

std::vector<double> solve_partial_pivot(DenseMatrix a, std::vector<double> b) {
  const std::size_t n = a.rows();
  if (a.cols() != n || b.size() != n)
    throw ContractViolation("solve_partial_pivot: system must be square and match the rhs");
  if (eliminate(a, &b) == 0) throw DegeneracyError("solve_partial_pivot: singular system");

  std::vector<double> x(n);
  for (std::size_t i = n; i-- > 0;) {
    double acc = b[i];
    for (std::size_t c = i + 1; c < n; ++c) acc -= a(i, c) * x[c];
    x[i] = acc / a(i, i);
  }
  return x;
}

double determinant(DenseMatrix a) {
  if (a.rows() != a.cols()) throw ContractViolation("determinant: matrix must be square");
  const int sign = eliminate(a, nullptr);
  if (sign == 0) return 0.0;
  double det = sign;
  for (std::size_t i = 0; i < a.rows(); ++i) det *= a(i, i);
  return det;
}

std::vector<double> singular_values(const DenseMatrix& a) {
  Eigen::MatrixXd m(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) m(r, c) = a(r, c);
  const Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  const Eigen::VectorXd& s = svd.singularValues();
  std::vector<double> out(s.data(), s.data() + s.size());
  std::sort(out.begin(), out.end());
  return out;
}

bool is_rank_deficient(const DenseMatrix& a) {
  if (a.cols() > a.rows()) return true;
  const std::vector<double> s = singular_values(a);
  if (s.empty() || s.back() == 0.0) return true;
  return s.front() <= kRankThreshold * s.back();
}

}  // namespace distlat
