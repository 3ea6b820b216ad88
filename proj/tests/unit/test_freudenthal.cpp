#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "distlat/errors.hpp"
#include "distlat/freudenthal.hpp"
#include "distlat/geometry.hpp"
#include "distlat/lattices.hpp"
#include "distlat/numeric.hpp"
#include "support/oracle.hpp"

using namespace distlat;

namespace {

Simplex grid_simplex(std::span<const LatticeCoords> v) {
  std::vector<Point> pts;
  for (const auto& c : v) pts.push_back(to_point(c));
  return Simplex(pts);
}

}  // namespace

TEST(Freudenthal, CountsAndDistinct) {
  for (int d = 1; d <= 7; ++d) {
    const auto all = enumerate_cube_simplices(d);
    EXPECT_EQ(all.size(), factorial(d));
    std::set<std::vector<int>> perms;
    for (const auto& c : all) {
      perms.emplace(c.permutation().begin(), c.permutation().end());
      EXPECT_TRUE(is_monotone_chain(c.vertices()));
    }
    EXPECT_EQ(perms.size(), all.size());
  }
  EXPECT_THROW(enumerate_cube_simplices(9), ResourceError);
}

TEST(Freudenthal, OneDimensional) {
  const auto all = enumerate_cube_simplices(1);
  ASSERT_EQ(all.size(), 1u);
  EXPECT_EQ(all[0].vertices(), (std::vector<LatticeCoords>{{0}, {1}}));
}

TEST(Freudenthal, VolumesSumToOne) {
  for (int d = 1; d <= 7; ++d) {
    oracle::Real total = 0;
    for (const auto& c : enumerate_cube_simplices(d)) {
      const auto v = c.vertices();
      std::vector<oracle::Vec> m;
      for (int i = 1; i <= d; ++i) m.emplace_back(v[i].begin(), v[i].end());
      total += oracle::abs_det(m) / static_cast<oracle::Real>(factorial(d));
    }
    EXPECT_NEAR(static_cast<double>(total), 1.0, 1e-9);
  }
}

TEST(Freudenthal, RandomPointsLieInExactlyOneSimplex) {
  std::mt19937 rng(9);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int d = 2; d <= 5; ++d) {
    const auto all = enumerate_cube_simplices(d);
    std::vector<Simplex> simplices;
    for (const auto& c : all) simplices.push_back(grid_simplex(c.vertices()));
    for (int trial = 0; trial < 200; ++trial) {
      Point p(d);
      for (int j = 0; j < d; ++j) p[j] = u(rng);
      int inside = 0;
      bool near_boundary = false;
      for (const Simplex& s : simplices) {
        const auto b = barycentric_coordinates(s, p);
        const double lo = *std::min_element(b.begin(), b.end());
        if (std::fabs(lo) <= 1e-9) near_boundary = true;
        if (lo >= -1e-9) ++inside;
      }
      if (!near_boundary) EXPECT_EQ(inside, 1);
    }
  }
}

TEST(Freudenthal, ChainRule) {
  const ChainSimplex c({2, 3, 1}, {5, -1, 0});
  const auto v = c.vertices();
  ASSERT_EQ(v.size(), 4u);
  EXPECT_EQ(v[0], (LatticeCoords{5, -1, 0}));
  // step i raises coordinate (d+1) - pi(i), 1-based: 2, then 1, then 3
  EXPECT_EQ(v[1], (LatticeCoords{5, 0, 0}));
  EXPECT_EQ(v[2], (LatticeCoords{6, 0, 0}));
  EXPECT_EQ(v[3], (LatticeCoords{6, 0, 1}));
  EXPECT_THROW(ChainSimplex({1, 1}, {0, 0}), ContractViolation);
  EXPECT_THROW(ChainSimplex({1, 2}, {0}), ContractViolation);
}

TEST(Freudenthal, CanonicalSimplex) {
  EXPECT_EQ(canonical_simplex(2).vertices(), (std::vector<LatticeCoords>{{0, 0}, {0, 1}, {1, 1}}));
  EXPECT_EQ(canonical_simplex(3).vertices(),
            (std::vector<LatticeCoords>{{0, 0, 0}, {0, 0, 1}, {0, 1, 1}, {1, 1, 1}}));
  const ChainSimplex c = canonical_simplex(4);
  const auto p = c.permutation();
  EXPECT_TRUE(std::is_sorted(p.begin(), p.end()));
}

TEST(Freudenthal, MonotoneChainRejects) {
  EXPECT_FALSE(is_monotone_chain(std::vector<LatticeCoords>{{0, 0}, {0, 0}}));
  EXPECT_FALSE(is_monotone_chain(std::vector<LatticeCoords>{{0, 1}, {1, 0}}));
  EXPECT_FALSE(is_monotone_chain(std::vector<LatticeCoords>{{0, 0}, {2, 0}}));
  EXPECT_TRUE(is_monotone_chain(std::vector<LatticeCoords>{{0, 0}, {1, 0}, {1, 1}}));
}

TEST(Freudenthal, DistortedSimplexExamples) {
  const Simplex s = distorted_simplex(canonical_simplex(2), {2, 0.5});
  EXPECT_LT(distance(s.vertex(1), Point{-0.25, 0.75}), 1e-15);
  EXPECT_LT(distance(s.vertex(2), Point{0.5, 0.5}), 1e-15);
  const Simplex same = distorted_simplex(canonical_simplex(3), {3, 1.0});
  EXPECT_EQ(same.vertex(2), (Point{0.0, 1.0, 1.0}));
  // delta = 0 flattens the chain onto the hyperplane sum = 0, where v^0 and v^d coincide
  const auto chain = canonical_simplex(3).vertices();
  for (int i = 0; i <= 3; ++i) {
    const Point flat = distort(to_point(chain[i]), {3, 0.0});
    for (int j = 0; j < 3; ++j) EXPECT_NEAR(flat[j], (j < 3 - i ? -i : 3.0 - i) / 3.0, 1e-15);
  }
  EXPECT_THROW(distorted_simplex(canonical_simplex(3), {3, 0.0}), ContractViolation);
}

TEST(Freudenthal, OppositeSetCanonical) {
  const OppositeSet n = opposite_set(canonical_simplex(3));
  EXPECT_EQ(n.points, (std::vector<LatticeCoords>{{1, 1, 2}, {0, 1, 0}, {1, 0, 1}, {-1, 0, 0}}));
  for (int d = 1; d <= 7; ++d) {
    const OppositeSet m = opposite_set(canonical_simplex(d));
    ASSERT_EQ(m.points.size(), static_cast<std::size_t>(d + 1));
    std::set<LatticeCoords> distinct(m.points.begin(), m.points.end());
    EXPECT_EQ(distinct.size(), m.points.size());
    for (int i = 0; i <= d; ++i) {
      std::int64_t sum = 0;
      for (auto c : m.points[i]) sum += c;
      EXPECT_EQ(sum, i == 0 ? d + 1 : (i == d ? -1 : i));
    }
  }
}

// Replacing vertex i by p^i must give another Freudenthal simplex, with p^i on the far side.
TEST(Freudenthal, OppositePointsCompleteNeighbourSimplices) {
  for (int d = 1; d <= 6; ++d) {
    for (const ChainSimplex& c : enumerate_cube_simplices(d)) {
      const auto v = c.vertices();
      const OppositeSet n = opposite_set(c);
      for (int i = 0; i <= d; ++i) {
        auto w = v;
        w[i] = n.points[i];
        std::sort(w.begin(), w.end());
        EXPECT_TRUE(is_monotone_chain(w)) << "d=" << d << " i=" << i;
        if (d >= 2) {
          const auto b = barycentric_coordinates(grid_simplex(v), to_point(n.points[i]));
          EXPECT_LT(b[i], -0.5);
        }
      }
    }
  }
}

TEST(Freudenthal, OppositeSetTranslatesWithChain) {
  const ChainSimplex c({3, 1, 2}, {2, -4, 7});
  const ChainSimplex at_origin({3, 1, 2}, {0, 0, 0});
  const auto moved = opposite_set(c).points;
  const auto base = opposite_set(at_origin).points;
  for (std::size_t i = 0; i < moved.size(); ++i)
    EXPECT_EQ(moved[i], (LatticeCoords{base[i][0] + 2, base[i][1] - 4, base[i][2] + 7}));
}
