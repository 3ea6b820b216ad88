#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "distlat/dense.hpp"
#include "distlat/errors.hpp"

using namespace distlat;

namespace {

DenseMatrix random_matrix(std::mt19937& rng, std::size_t n) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = u(rng);
  return m;
}

}  // namespace

TEST(Dense, SolveSmallSystem) {
  DenseMatrix a(2, 2);
  a(0, 0) = 0.0;
  a(0, 1) = 2.0;
  a(1, 0) = 3.0;
  a(1, 1) = 1.0;
  const auto x = solve_partial_pivot(a, {4.0, 5.0});
  EXPECT_NEAR(x[0], 1.0, 1e-15);
  EXPECT_NEAR(x[1], 2.0, 1e-15);
}

TEST(Dense, SolveRandomResidual) {
  std::mt19937 rng(7);
  for (std::size_t n = 1; n <= 8; ++n) {
    const DenseMatrix a = random_matrix(rng, n);
    std::vector<double> b(n);
    for (std::size_t i = 0; i < n; ++i) b[i] = static_cast<double>(i) - 1.5;
    const auto x = solve_partial_pivot(a, b);
    for (std::size_t i = 0; i < n; ++i) {
      double r = -b[i];
      for (std::size_t j = 0; j < n; ++j) r += a(i, j) * x[j];
      EXPECT_NEAR(r, 0.0, 1e-10);
    }
  }
}

TEST(Dense, SingularSystemThrows) {
  DenseMatrix a(2, 2, 1.0);
  EXPECT_THROW(solve_partial_pivot(a, {1.0, 2.0}), DegeneracyError);
  EXPECT_EQ(determinant(a), 0.0);
}

TEST(Dense, DeterminantMatchesProductOfSingularValues) {
  std::mt19937 rng(11);
  for (std::size_t n = 1; n <= 6; ++n) {
    const DenseMatrix a = random_matrix(rng, n);
    double prod = 1.0;
    for (double s : singular_values(a)) prod *= s;
    EXPECT_NEAR(std::fabs(determinant(a)), prod, 1e-12);
  }
}

TEST(Dense, SingularValuesAscending) {
  DenseMatrix a(3, 2);
  a(0, 0) = 3.0;
  a(1, 1) = 2.0;
  const auto s = singular_values(a);
  ASSERT_EQ(s.size(), 2u);
  EXPECT_NEAR(s[0], 2.0, 1e-14);
  EXPECT_NEAR(s[1], 3.0, 1e-14);
}

TEST(Dense, RankDeficiency) {
  EXPECT_FALSE(is_rank_deficient(DenseMatrix::identity(3)));
  DenseMatrix a(3, 2);
  a(0, 0) = 1.0;
  a(0, 1) = 2.0;
  EXPECT_TRUE(is_rank_deficient(a));
  EXPECT_TRUE(is_rank_deficient(DenseMatrix(2, 3, 1.0)));
}

TEST(Dense, TransposeAndProduct) {
  DenseMatrix a(2, 3);
  a(0, 2) = 1.0;
  a(1, 0) = 2.0;
  const DenseMatrix g = a * a.transposed();
  EXPECT_EQ(g(0, 0), 1.0);
  EXPECT_EQ(g(1, 1), 4.0);
  EXPECT_EQ(g(0, 1), 0.0);
  EXPECT_EQ(DenseMatrix::identity(2).max_abs_difference(DenseMatrix::identity(2)), 0.0);
}
