#pragma once

#include <cstdint>

namespace distlat {

inline constexpr double kDefaultTolerance = 1e-9;

/// Relative threshold on singular values below which a matrix is treated as rank-deficient.
inline constexpr double kRankThreshold = 1e-12;

/// Name of the environment variable that overrides kDefaultTolerance in the CLI.
inline constexpr const char* kToleranceEnvVar = "DISTLAT_TOLERANCE";

/// |a - b| <= tol * (1 + max(|a|, |b|)).
bool approx_equal(double a, double b, double tol = kDefaultTolerance);

/// |a - b| / max(|a|, |b|), or |a - b| when both are below 1e-300.
double relative_difference(double a, double b);

/// Reads kToleranceEnvVar; falls back when unset, unparsable or non-positive.
double tolerance_from_environment(double fallback = kDefaultTolerance);

std::uint64_t factorial(int n);

}  // namespace distlat
