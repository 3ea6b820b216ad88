#pragma once

#include <span>
#include <vector>

#include "distlat/closed_forms.hpp"
#include "distlat/report.hpp"

namespace distlat {

inline constexpr int kDefaultOracleBox = 3;

/// Brute-force protection of the canonical simplex sigma_delta. Enumerates T_delta(z) for
/// every z in Z^d with |z - round(T_delta^{-1}(C))|_inf <= box, with C and R computed from
/// coordinates, and takes min |q - C| - R over non-vertices. The report also checks that no
/// lattice point lies strictly inside the circumball, that for 0 < delta < 1 the minimizers are
/// exactly the regime's opposite points (the middle ones above critical, the two end ones
/// below, all d+1 at critical), that the value matches protection(), and, when
/// check_box_doubling is set, that box 2*box gives the same value.
/// Requires 2 <= d <= 6, 0 < delta <= 1, box >= 2. Throws ResourceError past 1e8 points.
OracleReport protection_oracle(int d, const DeltaValue& delta, int box = kDefaultOracleBox,
                               double tol = kDefaultTolerance, bool check_box_doubling = true);

/// Protection of each of the d! simplices of the unit cube from its own numeric circumsphere
/// and a local box oracle; passes when all values agree (spread <= tol).
OracleReport uniform_protection_check(int d, const DeltaValue& delta, int box = kDefaultOracleBox,
                                      double tol = kDefaultTolerance);

/// protection(d, delta) <= lambda_1(T_delta(Z^d)) <= sqrt(d) * delta^(1/d), using det = delta
/// and a coefficient box of coeff_bound for lambda_1. Requires 2 <= d <= 8.
OracleReport minkowski_check(int d, const DeltaValue& delta, int coeff_bound = 4,
                             double tol = kDefaultTolerance);

/// Quality records for every (d, delta) pair, sorted by (d, delta). With include_critical,
/// 1/sqrt(d+1) is added to each dimension's grid. Every delta must lie in (0, 1], every d >= 2.
std::vector<QualityRecord> figure_sweep(std::span<const int> dims, std::span<const double> deltas,
                                        bool include_critical);

/// Rows whose normalized protection is largest, one per dimension, in dimension order.
std::vector<QualityRecord> sweep_peaks(std::span<const QualityRecord> records);

}  // namespace distlat
