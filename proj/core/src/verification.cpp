#include "distlat/verification.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <set>
#include <string>

#include "distlat/errors.hpp"
#include "distlat/freudenthal.hpp"
#include "distlat/geometry.hpp"
#include "distlat/lattices.hpp"

namespace distlat {
namespace {

constexpr double kEnumerationBudget = 1e8;

struct LocalScan {
  double protection = std::numeric_limits<double>::infinity();
  std::vector<LatticeCoords> minimizers;  // sorted
  std::size_t inside = 0;                 // points strictly inside the circumball
  double deepest_inside = 0.0;
  std::size_t points = 0;
};

// Scans the lattice points T_delta(z) with |z - anchor|_inf <= box against the sphere
// (center, radius), skipping the simplex's own vertices.
LocalScan scan_box(int d, double delta, const Point& center, double radius,
                   const std::vector<LatticeCoords>& vertices, int box, double tol) {
  if (std::pow(2.0 * box + 1.0, d) > kEnumerationBudget)
    throw ResourceError("protection oracle: enumeration box exceeds the point budget");

  const DistortionParams params{d, 1.0 / delta};
  const Point preimage = distort(center, params);
  LatticeCoords anchor(d);
  for (int i = 0; i < d; ++i) anchor[i] = std::llround(preimage[i]);

  const std::set<LatticeCoords> skip(vertices.begin(), vertices.end());
  const double shrink = (1.0 - delta) / d;

  LocalScan scan;
  LatticeCoords z(d);
  std::vector<std::int64_t> offset(d, -box);
  while (true) {
    std::int64_t sum = 0;
    for (int i = 0; i < d; ++i) {
      z[i] = anchor[i] + offset[i];
      sum += z[i];
    }
    double sq = 0.0;
    const double shift = shrink * static_cast<double>(sum);
    for (int i = 0; i < d; ++i) {
      const double diff = static_cast<double>(z[i]) - shift - center[i];
      sq += diff * diff;
    }
    const double gap = std::sqrt(sq) - radius;
    // Vertex lookup is only needed for points that could matter.
    const bool relevant = gap < -tol || gap <= scan.protection + tol;
    if (relevant && !skip.contains(z)) {
      ++scan.points;
      if (gap < -tol) {
        ++scan.inside;
        scan.deepest_inside = std::max(scan.deepest_inside, -gap);
      }
      if (gap < scan.protection - tol) {
        scan.protection = gap;
        scan.minimizers.assign(1, z);
      } else if (std::abs(gap - scan.protection) <= tol) {
        scan.minimizers.push_back(z);
        scan.protection = std::min(scan.protection, gap);
      }
    } else if (!relevant) {
      ++scan.points;
    }
    int i = 0;
    for (; i < d; ++i) {
      if (offset[i] < box) {
        ++offset[i];
        break;
      }
      offset[i] = -box;
    }
    if (i == d) break;
  }
  // A later, slightly lower minimum may have left stale ties in the list.
  std::vector<LatticeCoords> kept;
  for (const LatticeCoords& m : scan.minimizers) {
    Point p = distort(to_point(m), {d, delta});
    if (distance(p, center) - radius <= scan.protection + tol) kept.push_back(m);
  }
  std::sort(kept.begin(), kept.end());
  scan.minimizers = std::move(kept);
  return scan;
}

void check_oracle_args(int d, const DeltaValue& delta, const char* where) {
  if (d < 2 || d > 6) throw ContractViolation(std::string(where) + ": d must lie in [2, 6]");
  if (!(delta.value() > 0.0 && delta.value() <= 1.0))
    throw ContractViolation(std::string(where) + ": delta must lie in (0, 1]");
}

}  // namespace

OracleReport protection_oracle(int d, const DeltaValue& delta, int box, double tol, bool check_box_doubling) {
  check_oracle_args(d, delta, "protection_oracle");
  if (box < 2) throw ContractViolation("protection_oracle: box must be >= 2");

  OracleReport report;
  report.claim = "brute-force protection of sigma_delta matches the closed form";
  report.dim = d;
  report.delta = delta.value();
  report.box = box;
  report.tolerance = tol;

  const ChainSimplex chain = canonical_simplex(d);
  const Simplex simplex = distorted_simplex(chain, {d, delta.value()});
  const Circumsphere sphere = circumsphere(simplex);
  const std::vector<LatticeCoords> vertices = chain.vertices();

  const LocalScan scan = scan_box(d, delta.value(), sphere.center, sphere.radius, vertices, box, tol);
  report.compare("protection", scan.protection, protection(d, delta));
  report.minimizers = scan.minimizers;
  report.note(std::to_string(scan.points) + " lattice points scanned, " + std::to_string(scan.minimizers.size()) +
              " minimizers");

  if (scan.inside > 0) {
    report.fail(std::to_string(scan.inside) + " lattice points strictly inside the circumball (deepest " +
                std::to_string(scan.deepest_inside) + ")");
  }

  if (check_box_doubling) {
    const LocalScan wide = scan_box(d, delta.value(), sphere.center, sphere.radius, vertices, 2 * box, tol);
    report.compare("protection_doubled_box", wide.protection, scan.protection);
  }

  if (delta.value() < 1.0) {
    const OppositeSet opposite = opposite_set(chain);
    std::vector<LatticeCoords> expected;
    switch (classify(d, delta)) {
      case Regime::above_critical:
        expected.assign(opposite.points.begin() + 1, opposite.points.end() - 1);
        break;
      case Regime::below_critical:
        expected = {opposite.points.front(), opposite.points.back()};
        break;
      case Regime::critical:
        expected = opposite.points;
        break;
    }
    std::sort(expected.begin(), expected.end());
    if (expected != scan.minimizers) report.fail("minimizer set differs from the regime's opposite points");
  } else {
    report.note("delta = 1: degenerate grid, " + std::to_string(scan.minimizers.size()) +
                " further lattice points lie on the circumsphere");
  }
  return report.finalize();
}

OracleReport uniform_protection_check(int d, const DeltaValue& delta, int box, double tol) {
  check_oracle_args(d, delta, "uniform_protection_check");
  if (box < 2) throw ContractViolation("uniform_protection_check: box must be >= 2");

  OracleReport report;
  report.claim = "every simplex of the triangulated cube has the same protection";
  report.dim = d;
  report.delta = delta.value();
  report.box = box;
  report.tolerance = tol;

  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  std::size_t count = 0;
  std::size_t inside = 0;
  for (const ChainSimplex& chain : enumerate_cube_simplices(d)) {
    const Simplex simplex = distorted_simplex(chain, {d, delta.value()});
    const Circumsphere sphere = circumsphere(simplex);
    const LocalScan scan = scan_box(d, delta.value(), sphere.center, sphere.radius, chain.vertices(), box, tol);
    lo = std::min(lo, scan.protection);
    hi = std::max(hi, scan.protection);
    inside += scan.inside;
    ++count;
  }
  report.measured.push_back({"min_protection", lo});
  report.measured.push_back({"max_protection", hi});
  report.measured.push_back({"simplices", static_cast<double>(count)});
  report.reference.push_back({"expected_simplices", static_cast<double>(factorial(d))});
  report.max_deviation = hi - lo;
  if (count != factorial(d)) report.fail("simplex count differs from d!");
  if (inside > 0) report.fail(std::to_string(inside) + " lattice points strictly inside some circumball");
  return report.finalize();
}

OracleReport minkowski_check(int d, const DeltaValue& delta, int coeff_bound, double tol) {
  if (d < 2 || d > 8) throw ContractViolation("minkowski_check: d must lie in [2, 8]");
  if (!(delta.value() > 0.0 && delta.value() <= 1.0))
    throw ContractViolation("minkowski_check: delta must lie in (0, 1]");

  OracleReport report;
  report.claim = "protection <= lambda_1 <= sqrt(d) det^(1/d)";
  report.dim = d;
  report.delta = delta.value();
  report.box = coeff_bound;
  report.tolerance = tol;

  LatticeSpec lattice = distorted_grid_basis({d, delta.value()});
  const ShortestVector shortest = shortest_vector(lattice, coeff_bound);
  lattice.set_lambda1(shortest.length);
  const double prot = protection(d, delta);
  const double bound = std::sqrt(static_cast<double>(d)) * std::pow(delta.value(), 1.0 / d);

  report.measured = {{"protection", prot}, {"lambda1", shortest.length}, {"det", lattice.det()}};
  report.reference = {{"minkowski_bound", bound}, {"delta", delta.value()}};
  report.minimizers = {shortest.coefficients};
  // Deviations are the amounts by which an inequality is violated (0 when it holds).
  report.max_deviation = std::max({0.0, prot - shortest.length, shortest.length - bound});
  return report.finalize();
}

std::vector<QualityRecord> figure_sweep(std::span<const int> dims, std::span<const double> deltas,
                                        bool include_critical) {
  for (double delta : deltas) {
    if (!(delta > 0.0 && delta <= 1.0)) throw ContractViolation("figure_sweep: every delta must lie in (0, 1]");
  }
  std::set<int> unique_dims(dims.begin(), dims.end());
  std::vector<QualityRecord> out;
  for (int d : unique_dims) {
    if (d < 2) throw ContractViolation("figure_sweep: dimensions must be >= 2");
    std::map<double, DeltaValue> grid;
    for (double delta : deltas) grid.emplace(delta, DeltaValue::of(delta));
    if (include_critical) grid.insert_or_assign(critical_delta(d), DeltaValue::critical(d));
    for (const auto& [value, delta] : grid) out.push_back(quality_record(d, delta));
  }
  return out;
}

std::vector<QualityRecord> sweep_peaks(std::span<const QualityRecord> records) {
  std::map<int, QualityRecord> best;
  for (const QualityRecord& r : records) {
    auto it = best.find(r.d);
    if (it == best.end()) {
      best.emplace(r.d, r);
    } else if (r.normalized_protection > it->second.normalized_protection) {
      it->second = r;
    }
  }
  std::vector<QualityRecord> out;
  for (const auto& [d, r] : best) out.push_back(r);
  return out;
}

}  // namespace distlat
