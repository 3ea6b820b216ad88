#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "distlat/geometry.hpp"
#include "distlat/lattices.hpp"

namespace distlat {

/// Integer coordinates of a point of Z^d.
using LatticeCoords = std::vector<std::int64_t>;

Point to_point(std::span<const std::int64_t> coords);

/// A simplex of the Freudenthal (Kuhn) triangulation of Z^d: starting from the translation t,
/// step i (1-based) adds 1 to coordinate (d+1) - pi(i) (1-based) of the previous vertex.
/// The identity permutation therefore fills coordinates d, d-1, ..., 1 in that order.
class ChainSimplex {
 public:
  /// permutation holds 1..d in some order; translation has d entries.
  ChainSimplex(std::vector<int> permutation, LatticeCoords translation);

  int dim() const { return static_cast<int>(permutation_.size()); }
  std::span<const int> permutation() const { return permutation_; }
  std::span<const std::int64_t> translation() const { return translation_; }

  /// 0-based coordinate incremented at 1-based step `step`.
  std::size_t step_coordinate(int step) const;

  /// The d+1 vertices, vertex 0 = translation, vertex d = translation + (1, ..., 1).
  std::vector<LatticeCoords> vertices() const;

  friend bool operator==(const ChainSimplex&, const ChainSimplex&) = default;

 private:
  std::vector<int> permutation_;
  LatticeCoords translation_;
};

/// True when the vertices are pairwise distinct, componentwise non-decreasing along the
/// sequence, and all lie in one unit cube.
bool is_monotone_chain(std::span<const LatticeCoords> vertices);

/// points[i] is the grid vertex opposite vertex i of the chain: together with the facet that
/// omits vertex i it spans the other Freudenthal simplex sharing that facet.
struct OppositeSet {
  std::vector<LatticeCoords> points;
};

/// All d! simplices of the triangulated unit cube, in lexicographic order of permutation.
/// Throws ResourceError for d > 8.
std::vector<ChainSimplex> enumerate_cube_simplices(int d);

/// The chain v^i = (0, ..., 0, 1, ..., 1) with i trailing ones; identity permutation.
ChainSimplex canonical_simplex(int d);

/// T_delta applied to every vertex.
Simplex distorted_simplex(const ChainSimplex& chain, const DistortionParams& params);

/// For the canonical chain:
///   p^0 = (1, ..., 1, 2),
///   p^i = (0, ..., 0, 1, 0, 1, ..., 1)   (d-i-1 leading zeros, i-1 trailing ones), 1 <= i < d,
///   p^d = (-1, 0, ..., 0),
/// with Delta(p^0) = d+1, Delta(p^i) = i, Delta(p^d) = -1. Any other chain gets the image of
/// these points under the coordinate permutation and translation that carry the canonical
/// chain onto it.
OppositeSet opposite_set(const ChainSimplex& chain);

}  // namespace distlat
