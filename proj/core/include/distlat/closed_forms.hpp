#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "distlat/point.hpp"

namespace distlat {

/// A distortion parameter together with its square. Formulas that depend only on delta^2 read
/// squared(); for the critical value that square is exactly 1/(d+1) (correctly rounded) rather
/// than the square of the rounded 1/sqrt(d+1).
class DeltaValue {
 public:
  static DeltaValue of(double delta);
  /// delta = 1/sqrt(d+1), at which T_delta(Z^d) is isometric to A*_d.
  static DeltaValue critical(int d);

  double value() const { return value_; }
  double squared() const { return squared_; }
  /// The dimension this value was built as critical for, if any.
  std::optional<int> critical_dim() const { return critical_dim_; }

 private:
  DeltaValue(double value, double squared, std::optional<int> critical_dim)
      : value_(value), squared_(squared), critical_dim_(critical_dim) {}

  double value_;
  double squared_;
  std::optional<int> critical_dim_;
};

enum class Regime { below_critical, critical, above_critical };

std::string_view to_string(Regime regime);

inline constexpr double kRegimeTolerance = 1e-12;

double critical_delta(int d);

/// critical when built by DeltaValue::critical(d) or |delta^2 - 1/(d+1)| <= kRegimeTolerance.
Regime classify(int d, const DeltaValue& delta);

// Geometry of the canonical distorted simplex sigma_delta = T_delta(v^0, ..., v^d).
// circumcenter / circumradius / barycentric_weights accept 0 <= delta <= 1; the rest need
// 0 < delta <= 1.

/// C_delta = delta * C_1 + (1 - delta^2) * C_0; coordinate j (1-based) is
/// delta/2 + (1 - delta^2)(2j - 1 - d)/(2d).
Point circumcenter(int d, const DeltaValue& delta);

/// sqrt(delta^2 d/4 + (1 - delta^2)^2 (d^2 - 1)/(12 d)).
double circumradius(int d, const DeltaValue& delta);

/// mu_0 = mu_d = (1 + (d-1) delta^2)/(2d), mu_i = (1 - delta^2)/d otherwise.
std::vector<double> barycentric_weights(int d, const DeltaValue& delta);

/// h^0 = h^d = delta sqrt(d) / sqrt(delta^2 d - delta^2 + 1); h^i = 1/sqrt(2) otherwise.
std::vector<double> heights(int d, const DeltaValue& delta);

/// Length of the edge v^i v^j with j - i = x: sqrt(d x - (1 - delta^2) x^2) / sqrt(d).
double edge_length(int d, const DeltaValue& delta, int x);

/// Longest edge: edge_length maximized over integer x in [1, d]. The quadratic in x is concave
/// with vertex d / (2(1 - delta^2)), so only the two integers around it (clamped) compete.
double longest_edge(int d, const DeltaValue& delta);

/// Longest edge with the maximization over real x: delta sqrt(d) for delta >= 1/sqrt(2),
/// sqrt(d) / (2 sqrt(1 - delta^2)) below. Only an upper bound on longest_edge() unless
/// d / (2(1 - delta^2)) is an integer or delta >= 1/sqrt(2).
double longest_edge_continuous(int d, const DeltaValue& delta);

/// min height / longest_edge().
double thickness(int d, const DeltaValue& delta);

/// Three-branch thickness with breakpoints 1/sqrt(2) and 1/sqrt(d+1), built on
/// longest_edge_continuous(); a lower bound on thickness().
double thickness_continuous(int d, const DeltaValue& delta);

/// Two-branch aspect ratio (min height / circumdiameter) with breakpoint 1/sqrt(d+1).
double aspect(int d, const DeltaValue& delta);

// Protection. All of these need d >= 2 and 0 < delta <= 1.

struct PowerProtection {
  double end;  // E_0 = E_d = 2 delta^2
  double mid;  // E_1 = ... = E_{d-1} = (2/d)(1 - delta^2)
};

PowerProtection power_protection(int d, const DeltaValue& delta);

/// D_i = |T_delta(p^i) - C_delta| - R_delta and E_i = |T_delta(p^i) - C_delta|^2 - R_delta^2,
/// evaluated from the distorted opposite points of the canonical simplex against the
/// closed-form circumcenter and circumradius. Throws std::logic_error if D_0 != D_d or the
/// middle values disagree (tolerance 1e-9).
struct ProtectionCandidates {
  std::vector<double> raw;    // D_0 ... D_d
  std::vector<double> power;  // E_0 ... E_d
};

ProtectionCandidates protection_candidates(int d, const DeltaValue& delta);

/// Branch valid for delta > 1/sqrt(d+1): the middle opposite points are nearest.
double protection_above_critical(int d, const DeltaValue& delta);
/// Branch valid for delta < 1/sqrt(d+1): the two end opposite points are nearest.
double protection_below_critical(int d, const DeltaValue& delta);
/// A*_d protection sqrt(d(d+2)/(12(d+1)) + 2/(d+1)) - sqrt(d(d+2)/(12(d+1))).
double protection_at_critical(int d);

/// Piecewise protection, dispatching on classify().
double protection(int d, const DeltaValue& delta);

/// protection / circumradius.
double normalized_protection(int d, const DeltaValue& delta);

/// The same ratio written as sqrt(numerator / denominator) - 1 per regime.
double normalized_protection_ratio_form(int d, const DeltaValue& delta);

/// Leading-order approximations of the ratio form:
/// 24(1 - delta^2)/(d^2 (delta^4 + delta^2 + 1)), 24/d^2, 24 delta^2/(d (delta^4 + delta^2 + 1)).
double normalized_protection_approximation(int d, const DeltaValue& delta);

struct CanonicalSimplexGeometry {
  int d;
  double delta;
  Point circumcenter;
  double circumradius;
  std::vector<double> barycentric;
  std::vector<double> heights;
  double longest_edge;
};

CanonicalSimplexGeometry canonical_geometry(int d, const DeltaValue& delta);

struct QualityRecord {
  int d;
  double delta;
  Regime regime;
  double protection;
  double normalized_protection;
  double power_end;
  double power_mid;
  double thickness;
  double aspect;
  double circumradius;
};

QualityRecord quality_record(int d, const DeltaValue& delta);

struct PermutahedralConstants {
  int d;
  double delaunay_radius;        // sqrt(d(d+2)/(12(d+1)))
  double outer_radius;           // sqrt(R_del^2 + 2/(d+1))
  double protection;             // outer_radius - delaunay_radius
  double normalized_protection;  // sqrt((d^2+2d+24)/(d^2+2d)) - 1
  double power_protection;       // 2/(d+1)
  Point voronoi_vertex;          // (1/(2(d+1))) (d, d-2, ..., -d) in R^{d+1}
};

PermutahedralConstants permutahedral_constants(int d);

}  // namespace distlat
