#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <sstream>

#include "distlat/errors.hpp"
#include "distlat/numeric.hpp"
#include "distlat/point.hpp"

using namespace distlat;

TEST(Numeric, ApproxEqualScalesWithMagnitude) {
  EXPECT_TRUE(approx_equal(1.0, 1.0 + 1e-10));
  EXPECT_FALSE(approx_equal(1.0, 1.0 + 1e-8));
  EXPECT_TRUE(approx_equal(1e6, 1e6 + 1e-4));
  EXPECT_FALSE(approx_equal(0.0, 1e-6));
}

TEST(Numeric, RelativeDifference) {
  EXPECT_DOUBLE_EQ(relative_difference(2.0, 1.0), 0.5);
  EXPECT_DOUBLE_EQ(relative_difference(0.0, 0.0), 0.0);
}

TEST(Numeric, Factorial) {
  EXPECT_EQ(factorial(0), 1u);
  EXPECT_EQ(factorial(1), 1u);
  EXPECT_EQ(factorial(5), 120u);
  EXPECT_EQ(factorial(8), 40320u);
}

TEST(Numeric, ToleranceFromEnvironment) {
  ::unsetenv(kToleranceEnvVar);
  EXPECT_EQ(tolerance_from_environment(), kDefaultTolerance);
  ::setenv(kToleranceEnvVar, "1e-6", 1);
  EXPECT_EQ(tolerance_from_environment(), 1e-6);
  ::setenv(kToleranceEnvVar, "junk", 1);
  EXPECT_EQ(tolerance_from_environment(), kDefaultTolerance);
  ::setenv(kToleranceEnvVar, "-3", 1);
  EXPECT_EQ(tolerance_from_environment(), kDefaultTolerance);
  ::unsetenv(kToleranceEnvVar);
}

TEST(Point, RejectsEmptyAndNonFinite) {
  EXPECT_THROW(Point(std::vector<double>{}), ContractViolation);
  EXPECT_THROW(Point({1.0, NAN}), ContractViolation);
  EXPECT_THROW(Point({INFINITY}), ContractViolation);
}

TEST(Point, Arithmetic) {
  const Point a{1.0, 2.0, 3.0};
  const Point b{4.0, -1.0, 0.5};
  EXPECT_EQ(a + b, (Point{5.0, 1.0, 3.5}));
  EXPECT_EQ(a - b, (Point{-3.0, 3.0, 2.5}));
  EXPECT_EQ(2.0 * a, (Point{2.0, 4.0, 6.0}));
  EXPECT_DOUBLE_EQ(dot(a, b), 3.5);
  EXPECT_DOUBLE_EQ(squared_norm(a), 14.0);
  EXPECT_DOUBLE_EQ(norm(Point{3.0, 4.0}), 5.0);
  EXPECT_DOUBLE_EQ(coordinate_sum(a), 6.0);
  EXPECT_THROW(a + Point{1.0}, ContractViolation);
}

TEST(Point, UnitVectorAndPrint) {
  EXPECT_EQ(unit_vector(3, 1), (Point{0.0, 1.0, 0.0}));
  std::ostringstream os;
  os << Point{1.0, 0.5};
  EXPECT_EQ(os.str(), "(1, 0.5)");
}
