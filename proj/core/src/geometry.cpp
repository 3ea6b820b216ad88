#include "distlat/geometry.hpp"

#include <Eigen/QR>
#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "distlat/errors.hpp"
#include "distlat/numeric.hpp"

namespace distlat {

Simplex::Simplex(std::vector<Point> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw ContractViolation("Simplex: needs at least one vertex");
  const std::size_t dim = vertices_.front().dim();
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (vertices_[i].dim() != dim) throw ContractViolation("Simplex: vertices differ in dimension");
    for (std::size_t j = 0; j < i; ++j) {
      if (vertices_[i] == vertices_[j])
        throw ContractViolation("Simplex: vertices " + std::to_string(j) + " and " +
                                std::to_string(i) + " coincide");
    }
  }
}

Simplex Simplex::facet(std::size_t omitted) const {
  if (combinatorial_dim() == 0) throw ContractViolation("Simplex::facet: a 0-simplex has no facets");
  if (omitted >= vertices_.size()) throw ContractViolation("Simplex::facet: index out of range");
  std::vector<Point> rest;
  rest.reserve(vertices_.size() - 1);
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    if (i != omitted) rest.push_back(vertices_[i]);
  return Simplex(std::move(rest));
}

DenseMatrix Simplex::edge_matrix() const {
  DenseMatrix e(ambient_dim(), combinatorial_dim());
  for (std::size_t j = 1; j < vertices_.size(); ++j)
    for (std::size_t r = 0; r < ambient_dim(); ++r) e(r, j - 1) = vertices_[j][r] - vertices_[0][r];
  return e;
}

double distance(const Point& p, const Point& q) {
  if (p.dim() != q.dim()) throw ContractViolation("distance: dimension mismatch");
  double sum = 0.0;
  for (std::size_t i = 0; i < p.dim(); ++i) {
    const double diff = p[i] - q[i];
    sum += diff * diff;
  }
  return std::sqrt(sum);
}

std::size_t geometric_dim(const Simplex& s) {
  if (s.combinatorial_dim() == 0) return 0;
  const std::vector<double> sv = singular_values(s.edge_matrix());
  if (sv.empty() || sv.back() == 0.0) return 0;
  const double cut = kRankThreshold * sv.back();
  return static_cast<std::size_t>(std::count_if(sv.begin(), sv.end(), [cut](double v) { return v > cut; }));
}

bool is_degenerate(const Simplex& s) {
  return s.combinatorial_dim() > 0 && is_rank_deficient(s.edge_matrix());
}

double height_above_facet(const Simplex& s, std::size_t vertex_index) {
  if (vertex_index > s.combinatorial_dim())
    throw ContractViolation("height_above_facet: vertex index out of range");
  const Simplex facet = s.facet(vertex_index);
  const Point w = s.vertex(vertex_index) - facet.vertex(0);
  if (facet.combinatorial_dim() == 0) return norm(w);

  const DenseMatrix edges = facet.edge_matrix();
  if (is_rank_deficient(edges)) throw DegeneracyError("height_above_facet: degenerate facet");

  Eigen::MatrixXd e(edges.rows(), edges.cols());
  for (std::size_t r = 0; r < edges.rows(); ++r)
    for (std::size_t c = 0; c < edges.cols(); ++c) e(r, c) = edges(r, c);
  Eigen::VectorXd rhs(w.dim());
  for (std::size_t r = 0; r < w.dim(); ++r) rhs(r) = w[r];
  const Eigen::VectorXd coeffs = e.householderQr().solve(rhs);
  return (rhs - e * coeffs).norm();
}

Circumsphere circumsphere(const Simplex& s) {
  const Point& origin = s.vertex(0);
  const std::size_t k = s.combinatorial_dim();
  if (k == 0) return {origin, 0.0};
  if (is_degenerate(s)) throw DegeneracyError("circumsphere: degenerate simplex");

  Point center = origin;
  if (k == s.ambient_dim()) {
    DenseMatrix rows(k, k);
    std::vector<double> rhs(k);
    for (std::size_t i = 1; i <= k; ++i) {
      const Point v = s.vertex(i) - origin;
      for (std::size_t c = 0; c < k; ++c) rows(i - 1, c) = v[c];
      rhs[i - 1] = 0.5 * squared_norm(v);
    }
    const std::vector<double> x = solve_partial_pivot(std::move(rows), std::move(rhs));
    for (std::size_t c = 0; c < k; ++c) center[c] += x[c];
  } else {
    const DenseMatrix edges = s.edge_matrix();
    const DenseMatrix gram = edges.transposed() * edges;
    std::vector<double> rhs(k);
    for (std::size_t i = 0; i < k; ++i) rhs[i] = 0.5 * gram(i, i);
    const std::vector<double> a = solve_partial_pivot(gram, std::move(rhs));
    for (std::size_t r = 0; r < s.ambient_dim(); ++r)
      for (std::size_t i = 0; i < k; ++i) center[r] += edges(r, i) * a[i];
  }

  const double radius = distance(center, origin);
  for (const Point& v : s.vertices()) {
    if (std::abs(distance(center, v) - radius) > kDefaultTolerance * (1.0 + radius))
      throw DegeneracyError("circumsphere: solve is too ill-conditioned to be equidistant");
  }
  return {std::move(center), radius};
}

SimplexMeasures simplex_measures(const Simplex& s) {
  if (s.combinatorial_dim() == 0) return {s.vertex(0), 0.0, 0.0, {}, 1.0, 1.0};

  Circumsphere sphere = circumsphere(s);

  double longest = 0.0;
  for (std::size_t i = 0; i < s.vertex_count(); ++i)
    for (std::size_t j = i + 1; j < s.vertex_count(); ++j)
      longest = std::max(longest, distance(s.vertex(i), s.vertex(j)));

  std::vector<double> heights(s.vertex_count());
  double min_height = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < s.vertex_count(); ++i) {
    heights[i] = height_above_facet(s, i);
    min_height = std::min(min_height, heights[i]);
  }

  const double radius = sphere.radius;
  return {std::move(sphere.center), radius,    longest, std::move(heights),
          min_height / longest,     min_height / (2.0 * radius)};
}

std::vector<double> barycentric_coordinates(const Simplex& s, const Point& p) {
  const std::size_t d = s.ambient_dim();
  if (s.combinatorial_dim() != d)
    throw ContractViolation("barycentric_coordinates: simplex must be full-dimensional");
  if (p.dim() != d) throw ContractViolation("barycentric_coordinates: dimension mismatch");

  const Point rel = p - s.vertex(0);
  std::vector<double> rhs(rel.coords().begin(), rel.coords().end());
  const std::vector<double> tail = solve_partial_pivot(s.edge_matrix(), std::move(rhs));
  std::vector<double> out(d + 1);
  double rest = 1.0;
  for (std::size_t i = 0; i < d; ++i) {
    out[i + 1] = tail[i];
    rest -= tail[i];
  }
  out[0] = rest;
  return out;
}

double volume(const Simplex& s) {
  const std::size_t d = s.ambient_dim();
  if (s.combinatorial_dim() != d) throw ContractViolation("volume: simplex must be full-dimensional");
  return std::abs(determinant(s.edge_matrix())) / static_cast<double>(factorial(static_cast<int>(d)));
}

}  // namespace distlat
