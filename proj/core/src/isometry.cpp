#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <string>

#include "distlat/closed_forms.hpp"
#include "distlat/errors.hpp"
#include "distlat/geometry.hpp"
#include "distlat/lattices.hpp"

namespace distlat {
namespace {

// Visits every integer vector in [-bound, bound]^n.
template <typename Visit>
void for_each_in_box(std::size_t n, int bound, Visit&& visit) {
  std::vector<std::int64_t> z(n, -bound);
  while (true) {
    visit(z);
    std::size_t i = 0;
    for (; i < n; ++i) {
      if (z[i] < bound) {
        ++z[i];
        break;
      }
      z[i] = -bound;
    }
    if (i == n) return;
  }
}

// Distance from p to its nearest neighbour in pool (infinity when pool is empty).
double nearest(const Point& p, const std::vector<Point>& pool) {
  double best = std::numeric_limits<double>::infinity();
  for (const Point& q : pool) best = std::min(best, distance(p, q));
  return best;
}

std::string describe(const Point& p) {
  std::ostringstream os;
  os << p;
  return os.str();
}

}  // namespace

OracleReport check_isometry_T0_to_Astar(int d, int box, double tol) {
  if (d < 2) throw ContractViolation("check_isometry_T0_to_Astar: d must be >= 2");
  if (box < 1 || box > 4) throw ContractViolation("check_isometry_T0_to_Astar: box must lie in [1, 4]");

  OracleReport report;
  report.claim = "T_0(Z^d) equals A*_{d-1} inside a ball";
  report.dim = d;
  report.delta = 0.0;
  report.box = box;
  report.tolerance = tol;
  const double radius = box;

  // Image side. z and z + k(1,...,1) share an image, so shift each z to min(z) = 0 to dedupe.
  const DistortionParams project{d, 0.0};
  std::set<std::vector<std::int64_t>> seen;
  std::vector<Point> image_inner, image_outer;
  for_each_in_box(d, box, [&](const std::vector<std::int64_t>& z) {
    std::vector<std::int64_t> key = z;
    const std::int64_t lo = *std::min_element(key.begin(), key.end());
    for (auto& c : key) c -= lo;
    if (!seen.insert(std::move(key)).second) return;
    std::vector<double> coords(z.begin(), z.end());
    const Point p = distort(Point(std::move(coords)), project);
    const double r = norm(p);
    if (r <= radius + tol) image_outer.push_back(p);
    if (r <= radius - tol) image_inner.push_back(p);
  });

  // Lattice side. Coefficients of x are G^{-1} B^T x, so |m_i| <= sqrt((G^{-1})_ii) |x|.
  const LatticeSpec astar = permutahedral_basis(d - 1);
  const GramMatrix g = gram(astar);
  const std::size_t n = astar.rank();
  double worst_row = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<double> e(n, 0.0);
    e[i] = 1.0;
    const std::vector<double> col = solve_partial_pivot(g.entries(), std::move(e));
    worst_row = std::max(worst_row, std::sqrt(col[i]));
  }
  const int coeff_bound = static_cast<int>(std::ceil(worst_row * (radius + tol)));
  std::vector<Point> lattice_inner, lattice_outer;
  for_each_in_box(n, coeff_bound, [&](const std::vector<std::int64_t>& m) {
    const Point p = astar.combine(m);
    const double r = norm(p);
    if (r <= radius + tol) lattice_outer.push_back(p);
    if (r <= radius - tol) lattice_inner.push_back(p);
  });

  report.measured.push_back({"image_points_in_ball", static_cast<double>(image_inner.size())});
  report.reference.push_back({"lattice_points_in_ball", static_cast<double>(lattice_inner.size())});
  report.note("ball radius " + std::to_string(radius) + ", A* coefficient bound " + std::to_string(coeff_bound));

  int reported = 0;
  auto match = [&](const std::vector<Point>& inner, const std::vector<Point>& pool, const char* missing_from) {
    for (const Point& p : inner) {
      const double dev = nearest(p, pool);
      report.max_deviation = std::max(report.max_deviation, dev);
      if (dev > tol && reported < 10) {
        report.note(describe(p) + " missing from " + missing_from);
        ++reported;
      }
    }
  };
  match(image_inner, lattice_outer, "A*_{d-1}");
  match(lattice_inner, image_outer, "T_0(Z^d)");
  if (image_inner.empty()) report.fail("no points inside the comparison ball");
  return report.finalize();
}

OracleReport check_isometry_to_Ad(int d, double tol) {
  if (d < 1) throw ContractViolation("check_isometry_to_Ad: d must be >= 1");
  OracleReport report;
  report.claim = "T_gamma(Z^d) is isometric to A_d at gamma = sqrt(d+1)";
  report.dim = d;
  report.delta = std::sqrt(d + 1.0);
  report.tolerance = tol;

  const GramMatrix distorted = gram(distorted_grid_basis({d, std::sqrt(d + 1.0)}));
  const GramMatrix ad = gram(a_basis(d));
  for (std::size_t i = 0; i < distorted.size(); ++i)
    for (std::size_t j = 0; j < distorted.size(); ++j)
      report.compare("gram[" + std::to_string(i) + "][" + std::to_string(j) + "]", distorted(i, j), ad(i, j));
  return report.finalize();
}

OracleReport check_isometry_to_Astar_at_critical(int d, double tol) {
  if (d < 1) throw ContractViolation("check_isometry_to_Astar_at_critical: d must be >= 1");
  OracleReport report;
  report.claim = "T_delta(Z^d) matches A*_d scalars at delta = 1/sqrt(d+1)";
  report.dim = d;
  report.delta = critical_delta(d);
  report.tolerance = tol;

  using Scale = OracleReport::Scale;
  const PermutahedralConstants astar = permutahedral_constants(d);
  const DeltaValue exact = DeltaValue::critical(d);
  const DeltaValue rounded = DeltaValue::of(critical_delta(d));

  report.compare("circumradius", circumradius(d, exact), astar.delaunay_radius, Scale::relative);
  report.compare("circumradius_rounded_delta", circumradius(d, rounded), astar.delaunay_radius, Scale::relative);
  if (d >= 2) {
    report.compare("protection_above_branch", protection_above_critical(d, exact), astar.protection, Scale::relative);
    report.compare("protection_below_branch", protection_below_critical(d, exact), astar.protection, Scale::relative);
    const double r = circumradius(d, exact);
    const PowerProtection power = power_protection(d, exact);
    report.compare("protection_from_end_power", std::sqrt(r * r + power.end) - r, astar.protection, Scale::relative);
    report.compare("protection_from_mid_power", std::sqrt(r * r + power.mid) - r, astar.protection, Scale::relative);
  }
  return report.finalize();
}

}  // namespace distlat
