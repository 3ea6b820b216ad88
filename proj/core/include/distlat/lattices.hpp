#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "distlat/dense.hpp"
#include "distlat/point.hpp"
#include "distlat/report.hpp"

namespace distlat {

/// Ambient dimension and distortion parameter of T_delta on R^d.
struct DistortionParams {
  int dim;
  double delta;
};

/// T_delta(x) = x - ((1 - delta) / d) * Delta(x) * (1, ..., 1).
/// Scales the component along the main diagonal by delta and leaves the orthogonal part fixed.
Point distort(const Point& x, const DistortionParams& params);

/// A lattice given by an ordered basis, with its determinant and singular values cached.
/// For a rank-n basis in R^m (n <= m) det is the n-volume of the fundamental cell, i.e. the
/// product of the singular values of the m x n basis matrix.
class LatticeSpec {
 public:
  /// Throws DegeneracyError if the basis vectors are linearly dependent.
  static LatticeSpec from_basis(std::vector<Point> basis);

  std::size_t ambient_dim() const { return basis_.front().dim(); }
  std::size_t rank() const { return basis_.size(); }
  std::span<const Point> basis() const { return basis_; }
  double det() const { return det_; }
  std::span<const double> singular_values() const { return singular_values_; }
  std::optional<double> lambda1() const { return lambda1_; }
  void set_lambda1(double value) { lambda1_ = value; }

  /// sum_i coeffs[i] * basis[i]
  Point combine(std::span<const std::int64_t> coeffs) const;

 private:
  explicit LatticeSpec(std::vector<Point> basis);

  std::vector<Point> basis_;
  double det_ = 0.0;
  std::vector<double> singular_values_;
  std::optional<double> lambda1_;
};

/// Symmetric matrix of pairwise basis dot products.
class GramMatrix {
 public:
  explicit GramMatrix(DenseMatrix entries);
  std::size_t size() const { return entries_.rows(); }
  double operator()(std::size_t i, std::size_t j) const { return entries_(i, j); }
  const DenseMatrix& entries() const { return entries_; }
  double max_abs_difference(const GramMatrix& other) const;

 private:
  DenseMatrix entries_;
};

GramMatrix gram(std::span<const Point> basis);
GramMatrix gram(const LatticeSpec& spec);

/// Standard basis of Z^d.
LatticeSpec integer_grid_basis(int d);

/// {T_delta(e_1), ..., T_delta(e_d)}. Throws DegeneracyError for delta = 0, where the image
/// collapses into the hyperplane sum(x) = 0.
LatticeSpec distorted_grid_basis(const DistortionParams& params);

/// The vectors g_k = (1/d) (d+1-k [k times], -k [d+1-k times]) in R^{d+1}, k = 1..d.
/// Their coordinate sums vanish. With denominator d they span ((d+1)/d) * A*_d; see
/// permutahedral_basis() for the unit-normalized A*_d.
LatticeSpec a_star_basis(int d);

/// Generators of A*_n in R^{n+1}: g_k = (1/(n+1)) (n+1-k [k times], -k [n+1-k times]).
LatticeSpec permutahedral_basis(int n);

/// Basis u_i = e_1 - e_{i+1} (i = 1..d) of A_d = {x in Z^{d+1} : sum x = 0}.
/// Gram matrix: 2 on the diagonal, 1 elsewhere.
LatticeSpec a_basis(int d);

struct ShortestVector {
  double length;
  std::vector<std::int64_t> coefficients;
  Point vector;
};

/// Exhaustive search over nonzero integer coefficient vectors with |m_i| <= coeff_bound.
/// Throws ResourceError when the box holds more than 1e8 candidates.
ShortestVector shortest_vector(const LatticeSpec& spec, int coeff_bound = 4);

/// Bounded set equality of T_0(Z^d) and A*_{d-1} (embedded in R^d) inside the ball of
/// radius `box` around the origin. Every lattice point of the projected cube [-box, box]^d
/// has an integer preimage in that cube, and the projected cube contains that ball.
OracleReport check_isometry_T0_to_Astar(int d, int box = 2, double tol = kDefaultTolerance);

/// Gram matrix of T_gamma(Z^d) at gamma = sqrt(d+1) against that of a_basis(d).
OracleReport check_isometry_to_Ad(int d, double tol = kDefaultTolerance);

/// At delta = 1/sqrt(d+1): circumradius equals the A*_d Delaunay radius and the protection
/// equals the A*_d protection, via several independent algebraic routes (relative tolerance).
OracleReport check_isometry_to_Astar_at_critical(int d, double tol = 1e-12);

}  // namespace distlat
