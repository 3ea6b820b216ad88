#include <gtest/gtest.h>

#include <cmath>

#include "distlat/closed_forms.hpp"
#include "distlat/errors.hpp"
#include "distlat/verification.hpp"
#include "support/oracle.hpp"

using namespace distlat;

using Coords = std::vector<std::vector<std::int64_t>>;

TEST(ProtectionOracle, BelowCriticalEndsAreNearest) {
  const OracleReport r = protection_oracle(3, DeltaValue::of(0.3));
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.minimizers, (Coords{{-1, 0, 0}, {1, 1, 2}}));
  const auto brute = oracle::canonical_protection(3, 0.3L, 3);
  EXPECT_EQ(brute.minimizers, r.minimizers);
}

TEST(ProtectionOracle, AboveCriticalMiddlesAreNearest) {
  const OracleReport r = protection_oracle(3, DeltaValue::of(0.8));
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.minimizers, (Coords{{0, 1, 0}, {1, 0, 1}}));
}

TEST(ProtectionOracle, CriticalTiesAllOpposite) {
  const OracleReport r = protection_oracle(2, DeltaValue::critical(2));
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.minimizers.size(), 3u);
  EXPECT_NEAR(r.measured.front().value, permutahedral_constants(2).protection, 1e-12);
}

TEST(ProtectionOracle, GridCaseIsDegenerate) {
  const OracleReport r = protection_oracle(2, DeltaValue::of(1.0));
  EXPECT_TRUE(r.pass);
  EXPECT_NEAR(r.measured.front().value, 0.0, 1e-12);
  EXPECT_GE(r.minimizers.size(), 1u);
}

TEST(ProtectionOracle, AgreesWithIndependentEnumeration) {
  for (int d = 2; d <= 4; ++d) {
    for (double delta : {0.25, 0.55, 0.85}) {
      const OracleReport r = protection_oracle(d, DeltaValue::of(delta), 3, 1e-9, false);
      const auto brute = oracle::canonical_protection(d, delta, 3);
      EXPECT_NEAR(r.measured.front().value, static_cast<double>(brute.value), 1e-12);
      EXPECT_GE(static_cast<double>(brute.min_gap_all), -1e-9);
      EXPECT_EQ(r.minimizers, brute.minimizers);
    }
  }
}

TEST(ProtectionOracle, Preconditions) {
  EXPECT_THROW(protection_oracle(1, DeltaValue::of(0.5)), ContractViolation);
  EXPECT_THROW(protection_oracle(7, DeltaValue::of(0.5)), ContractViolation);
  EXPECT_THROW(protection_oracle(3, DeltaValue::of(0.0)), ContractViolation);
  EXPECT_THROW(protection_oracle(3, DeltaValue::of(0.5), 1), ContractViolation);
}

TEST(UniformProtection, Examples) {
  const OracleReport a = uniform_protection_check(3, DeltaValue::of(0.5));
  EXPECT_TRUE(a.pass);
  const OracleReport b = uniform_protection_check(2, DeltaValue::critical(2));
  EXPECT_TRUE(b.pass);
  EXPECT_NEAR(b.measured.front().value, permutahedral_constants(2).protection, 1e-12);
  EXPECT_TRUE(uniform_protection_check(4, DeltaValue::of(0.9)).pass);
}

TEST(Minkowski, Examples) {
  EXPECT_TRUE(minkowski_check(3, DeltaValue::of(0.5)).pass);
  EXPECT_TRUE(minkowski_check(2, DeltaValue::of(1.0)).pass);
  EXPECT_TRUE(minkowski_check(5, DeltaValue::critical(5)).pass);
  EXPECT_THROW(minkowski_check(9, DeltaValue::of(0.5)), ContractViolation);
}

TEST(FigureSweep, CountsOrderingAndCritical) {
  const std::vector<int> dims{3, 2};
  std::vector<double> deltas;
  for (int k = 1; k <= 10; ++k) deltas.push_back(0.1 * k);
  const auto plain = figure_sweep(dims, deltas, false);
  EXPECT_EQ(plain.size(), 20u);
  EXPECT_EQ(plain.front().d, 2);
  for (std::size_t i = 1; i < plain.size(); ++i)
    EXPECT_TRUE(plain[i - 1].d < plain[i].d || (plain[i - 1].d == plain[i].d && plain[i - 1].delta < plain[i].delta));
  const auto with_crit = figure_sweep(dims, deltas, true);
  // d = 3 has 1/sqrt(4) = 0.5 already on the grid
  EXPECT_EQ(with_crit.size(), 21u);
  EXPECT_EQ(plain.back().protection, 0.0);
  const auto peaks = sweep_peaks(with_crit);
  ASSERT_EQ(peaks.size(), 2u);
  EXPECT_NEAR(peaks[0].delta, 1.0 / std::sqrt(3.0), 1e-15);
  EXPECT_NEAR(peaks[0].normalized_protection, 1.0, 1e-12);
  EXPECT_NEAR(peaks[1].delta, 0.5, 1e-15);
  EXPECT_THROW(figure_sweep(dims, std::vector<double>{1.5}, false), ContractViolation);
}
