#include "distlat/freudenthal.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "distlat/errors.hpp"

namespace distlat {

Point to_point(std::span<const std::int64_t> coords) {
  std::vector<double> out(coords.begin(), coords.end());
  return Point(std::move(out));
}

ChainSimplex::ChainSimplex(std::vector<int> permutation, LatticeCoords translation)
    : permutation_(std::move(permutation)), translation_(std::move(translation)) {
  const std::size_t d = permutation_.size();
  if (d == 0) throw ContractViolation("ChainSimplex: dimension must be >= 1");
  if (translation_.size() != d) throw ContractViolation("ChainSimplex: translation has the wrong dimension");
  std::vector<int> sorted = permutation_;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < d; ++i) {
    if (sorted[i] != static_cast<int>(i) + 1)
      throw ContractViolation("ChainSimplex: not a permutation of 1.." + std::to_string(d));
  }
}

std::size_t ChainSimplex::step_coordinate(int step) const {
  if (step < 1 || step > dim()) throw ContractViolation("ChainSimplex::step_coordinate: step out of range");
  return static_cast<std::size_t>(dim() - permutation_[step - 1]);
}

std::vector<LatticeCoords> ChainSimplex::vertices() const {
  std::vector<LatticeCoords> out;
  out.reserve(permutation_.size() + 1);
  out.push_back(translation_);
  for (int step = 1; step <= dim(); ++step) {
    LatticeCoords next = out.back();
    ++next[step_coordinate(step)];
    out.push_back(std::move(next));
  }
  return out;
}

bool is_monotone_chain(std::span<const LatticeCoords> vertices) {
  if (vertices.empty()) return false;
  const std::size_t d = vertices.front().size();
  for (const LatticeCoords& v : vertices)
    if (v.size() != d) return false;
  for (std::size_t i = 1; i < vertices.size(); ++i) {
    if (vertices[i] == vertices[i - 1]) return false;
    for (std::size_t c = 0; c < d; ++c)
      if (vertices[i][c] < vertices[i - 1][c]) return false;
  }
  // Componentwise order is transitive, so first and last bound everything.
  for (std::size_t c = 0; c < d; ++c)
    if (vertices.back()[c] - vertices.front()[c] > 1) return false;
  return true;
}

std::vector<ChainSimplex> enumerate_cube_simplices(int d) {
  if (d < 1) throw ContractViolation("enumerate_cube_simplices: dimension must be >= 1");
  if (d > 8) throw ResourceError("enumerate_cube_simplices: d! simplices for d > 8 exceeds the budget");
  std::vector<int> perm(d);
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<ChainSimplex> out;
  do {
    out.emplace_back(perm, LatticeCoords(d, 0));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

ChainSimplex canonical_simplex(int d) {
  if (d < 1) throw ContractViolation("canonical_simplex: dimension must be >= 1");
  std::vector<int> perm(d);
  std::iota(perm.begin(), perm.end(), 1);
  return ChainSimplex(std::move(perm), LatticeCoords(d, 0));
}

Simplex distorted_simplex(const ChainSimplex& chain, const DistortionParams& params) {
  if (chain.dim() != params.dim) throw ContractViolation("distorted_simplex: dimension mismatch");
  std::vector<Point> pts;
  for (const LatticeCoords& v : chain.vertices()) pts.push_back(distort(to_point(v), params));
  return Simplex(std::move(pts));
}

OppositeSet opposite_set(const ChainSimplex& chain) {
  const int d = chain.dim();

  std::vector<LatticeCoords> canonical(d + 1, LatticeCoords(d, 0));
  std::fill(canonical[0].begin(), canonical[0].end(), 1);
  canonical[0][d - 1] = 2;
  for (int i = 1; i < d; ++i) {
    // d-i-1 zeros, then 1, 0, then i-1 ones.
    canonical[i][d - i - 1] = 1;
    for (int c = d - i + 1; c < d; ++c) canonical[i][c] = 1;
  }
  canonical[d][0] = -1;

  // Canonical coordinate c is filled at step d - c; the chain fills coordinate d - pi(d - c)
  // at that step.
  OppositeSet out;
  out.points.reserve(d + 1);
  for (const LatticeCoords& p : canonical) {
    LatticeCoords image(d);
    for (int c = 0; c < d; ++c) image[chain.step_coordinate(d - c)] = p[c];
    for (int c = 0; c < d; ++c) image[c] += chain.translation()[c];
    out.points.push_back(std::move(image));
  }
  return out;
}

}  // namespace distlat
