#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "distlat/dense.hpp"
#include "distlat/point.hpp"

namespace distlat {

/// An ordered list of k+1 distinct vertices in a common ambient space.
class Simplex {
 public:
  explicit Simplex(std::vector<Point> vertices);

  std::size_t combinatorial_dim() const { return vertices_.size() - 1; }
  std::size_t ambient_dim() const { return vertices_.front().dim(); }
  std::size_t vertex_count() const { return vertices_.size(); }
  const Point& vertex(std::size_t i) const { return vertices_.at(i); }
  std::span<const Point> vertices() const { return vertices_; }

  /// The sub-simplex without vertex `omitted`. Requires combinatorial_dim() >= 1.
  Simplex facet(std::size_t omitted) const;

  /// Ambient x k matrix whose columns are v_i - v_0, i = 1..k.
  DenseMatrix edge_matrix() const;

 private:
  std::vector<Point> vertices_;
};

struct Circumsphere {
  Point center;
  double radius;
};

/// Everything derived from vertex coordinates alone: no closed forms.
struct SimplexMeasures {
  Point circumcenter;
  double circumradius;
  double longest_edge;
  std::vector<double> heights;  // heights[i]: distance of vertex i to the affine hull of the others
  double thickness;             // min height / longest edge
  double aspect;                // min height / (2 * circumradius)
};

double distance(const Point& p, const Point& q);

/// Rank of the edge-vector span, using the kRankThreshold singular-value cut-off.
std::size_t geometric_dim(const Simplex& s);

bool is_degenerate(const Simplex& s);

/// Orthogonal distance from vertex `vertex_index` to the affine hull of the remaining vertices,
/// by least-squares projection onto the facet's edge span.
double height_above_facet(const Simplex& s, std::size_t vertex_index);

/// Center equidistant from all vertices, lying in the simplex's affine hull, and the common
/// distance. Full-dimensional simplices are translated so vertex 0 is the origin and the
/// d x d system <c, v_i> = |v_i|^2 / 2 is solved by partial pivoting; lower-dimensional ones
/// solve the Gram system of their edge vectors instead.
Circumsphere circumsphere(const Simplex& s);

SimplexMeasures simplex_measures(const Simplex& s);

/// Barycentric coordinates of p with respect to a full-dimensional simplex.
std::vector<double> barycentric_coordinates(const Simplex& s, const Point& p);

/// |det(edge matrix)| / d! for a full-dimensional simplex.
double volume(const Simplex& s);

}  // namespace distlat
