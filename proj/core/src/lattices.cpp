#include "distlat/lattices.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "distlat/errors.hpp"
#include "distlat/numeric.hpp"

namespace distlat {
namespace {

void check_params(const DistortionParams& params) {
  if (params.dim < 1) throw ContractViolation("DistortionParams: dimension must be >= 1");
  if (!std::isfinite(params.delta)) throw ContractViolation("DistortionParams: delta must be finite");
}

void check_dim(int d, const char* where) {
  if (d < 1) throw ContractViolation(std::string(where) + ": dimension must be >= 1");
}

}  // namespace

Point distort(const Point& x, const DistortionParams& params) {
  check_params(params);
  if (x.dim() != static_cast<std::size_t>(params.dim))
    throw ContractViolation("distort: point dimension " + std::to_string(x.dim()) +
                            " does not match d = " + std::to_string(params.dim));
  const double shift = (1.0 - params.delta) / params.dim * coordinate_sum(x);
  Point out = x;
  for (std::size_t i = 0; i < out.dim(); ++i) out[i] -= shift;
  return out;
}

LatticeSpec::LatticeSpec(std::vector<Point> basis) : basis_(std::move(basis)) {}

LatticeSpec LatticeSpec::from_basis(std::vector<Point> basis) {
  if (basis.empty()) throw ContractViolation("LatticeSpec: empty basis");
  LatticeSpec spec(std::move(basis));
  const DenseMatrix columns = DenseMatrix::from_columns(spec.basis_);
  if (is_rank_deficient(columns)) throw DegeneracyError("LatticeSpec: basis vectors are linearly dependent");
  spec.singular_values_ = distlat::singular_values(columns);
  spec.det_ = 1.0;
  for (double s : spec.singular_values_) spec.det_ *= s;
  return spec;
}

Point LatticeSpec::combine(std::span<const std::int64_t> coeffs) const {
  if (coeffs.size() != basis_.size()) throw ContractViolation("LatticeSpec::combine: wrong coefficient count");
  Point out(ambient_dim());
  for (std::size_t i = 0; i < coeffs.size(); ++i) out += static_cast<double>(coeffs[i]) * basis_[i];
  return out;
}

GramMatrix::GramMatrix(DenseMatrix entries) : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols()) throw ContractViolation("GramMatrix: must be square");
}

double GramMatrix::max_abs_difference(const GramMatrix& other) const {
  return entries_.max_abs_difference(other.entries_);
}

GramMatrix gram(std::span<const Point> basis) {
  if (basis.empty()) throw ContractViolation("gram: empty basis");
  DenseMatrix g(basis.size(), basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i; j < basis.size(); ++j) g(i, j) = g(j, i) = dot(basis[i], basis[j]);
  return GramMatrix(std::move(g));
}

GramMatrix gram(const LatticeSpec& spec) { return gram(spec.basis()); }

LatticeSpec integer_grid_basis(int d) {
  check_dim(d, "integer_grid_basis");
  std::vector<Point> basis;
  for (int i = 0; i < d; ++i) basis.push_back(unit_vector(d, i));
  return LatticeSpec::from_basis(std::move(basis));
}

LatticeSpec distorted_grid_basis(const DistortionParams& params) {
  check_params(params);
  if (params.delta == 0.0)
    throw DegeneracyError("distorted_grid_basis: delta = 0 projects Z^d onto a hyperplane (rank d-1)");
  std::vector<Point> basis;
  for (int i = 0; i < params.dim; ++i) basis.push_back(distort(unit_vector(params.dim, i), params));
  return LatticeSpec::from_basis(std::move(basis));
}

namespace {

LatticeSpec glue_basis(int n, double denominator) {
  std::vector<Point> basis;
  for (int k = 1; k <= n; ++k) {
    Point g(n + 1);
    for (int j = 0; j <= n; ++j) g[j] = (j < k ? n + 1 - k : -k) / denominator;
    basis.push_back(std::move(g));
  }
  return LatticeSpec::from_basis(std::move(basis));
}

}  // namespace

LatticeSpec a_star_basis(int d) {
  check_dim(d, "a_star_basis");
  return glue_basis(d, d);
}

LatticeSpec permutahedral_basis(int n) {
  check_dim(n, "permutahedral_basis");
  return glue_basis(n, n + 1);
}

LatticeSpec a_basis(int d) {
  check_dim(d, "a_basis");
  std::vector<Point> basis;
  for (int i = 1; i <= d; ++i) {
    Point u(d + 1);
    u[0] = 1.0;
    u[i] = -1.0;
    basis.push_back(std::move(u));
  }
  return LatticeSpec::from_basis(std::move(basis));
}

ShortestVector shortest_vector(const LatticeSpec& spec, int coeff_bound) {
  if (coeff_bound < 1) throw ContractViolation("shortest_vector: coeff_bound must be >= 1");
  const std::size_t n = spec.rank();
  const double side = 2.0 * coeff_bound + 1.0;
  if (std::pow(side, static_cast<double>(n)) > 1e8)
    throw ResourceError("shortest_vector: coefficient box exceeds 1e8 candidates");

  const std::size_t m = spec.ambient_dim();
  const auto basis = spec.basis();
  std::vector<std::int64_t> coeffs(n, -coeff_bound);
  std::vector<double> acc(m, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t r = 0; r < m; ++r) acc[r] -= coeff_bound * basis[i][r];

  double best_sq = std::numeric_limits<double>::infinity();
  std::vector<std::int64_t> best;
  // Odometer over the box with incremental accumulation; the winner is recomputed exactly below.
  while (true) {
    bool zero = true;
    for (std::int64_t c : coeffs) zero = zero && c == 0;
    if (!zero) {
      double sq = 0.0;
      for (double a : acc) sq += a * a;
      if (sq < best_sq) {
        best_sq = sq;
        best = coeffs;
      }
    }
    std::size_t i = 0;
    for (; i < n; ++i) {
      if (coeffs[i] < coeff_bound) {
        ++coeffs[i];
        for (std::size_t r = 0; r < m; ++r) acc[r] += basis[i][r];
        break;
      }
      coeffs[i] = -coeff_bound;
      for (std::size_t r = 0; r < m; ++r) acc[r] -= 2.0 * coeff_bound * basis[i][r];
    }
    if (i == n) break;
  }

  Point v = spec.combine(best);
  const double length = norm(v);
  return {length, std::move(best), std::move(v)};
}

}  // namespace distlat
