#include "distlat/closed_forms.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "distlat/errors.hpp"
#include "distlat/freudenthal.hpp"
#include "distlat/lattices.hpp"
#include "distlat/numeric.hpp"

namespace distlat {
namespace {

void check_dim(int d, int min_dim, const char* where) {
  if (d < min_dim)
    throw ContractViolation(std::string(where) + ": dimension must be >= " + std::to_string(min_dim));
}

void check_delta(int d, const DeltaValue& delta, bool allow_zero, const char* where) {
  const double v = delta.value();
  const bool ok = allow_zero ? (v >= 0.0 && v <= 1.0) : (v > 0.0 && v <= 1.0);
  if (!ok) {
    throw ContractViolation(std::string(where) + ": delta must lie in " + (allow_zero ? "[0, 1]" : "(0, 1]") +
                            ", got " + std::to_string(v));
  }
  if (delta.critical_dim() && *delta.critical_dim() != d)
    throw ContractViolation(std::string(where) + ": critical delta was built for d = " +
                            std::to_string(*delta.critical_dim()) + ", used with d = " + std::to_string(d));
}

// 12 d R^2 = delta^4 (d^2-1) + delta^2 (d^2+2) + d^2 - 1
double twelve_d_radius_sq(int d, double s) {
  const double dd = static_cast<double>(d) * d;
  return s * s * (dd - 1.0) + s * (dd + 2.0) + dd - 1.0;
}

// 12 d (R^2 + E_mid)
double twelve_d_mid_sq(int d, double s) {
  const double dd = static_cast<double>(d) * d;
  return s * s * (dd - 1.0) + s * (dd - 22.0) + dd + 23.0;
}

// 12 d (R^2 + E_end)
double twelve_d_end_sq(int d, double s) {
  const double dd = static_cast<double>(d) * d;
  return s * s * (dd - 1.0) + s * (dd + 24.0 * d + 2.0) + dd - 1.0;
}

double astar_radius_sq(int d) { return d * (d + 2.0) / (12.0 * (d + 1.0)); }

}  // namespace

DeltaValue DeltaValue::of(double delta) {
  if (!std::isfinite(delta)) throw ContractViolation("DeltaValue: delta must be finite");
  return DeltaValue(delta, delta * delta, std::nullopt);
}

DeltaValue DeltaValue::critical(int d) {
  check_dim(d, 1, "DeltaValue::critical");
  return DeltaValue(1.0 / std::sqrt(d + 1.0), 1.0 / (d + 1.0), d);
}

std::string_view to_string(Regime regime) {
  switch (regime) {
    case Regime::below_critical: return "below_critical";
    case Regime::critical: return "critical";
    case Regime::above_critical: return "above_critical";
  }
  return "unknown";
}

double critical_delta(int d) {
  check_dim(d, 1, "critical_delta");
  return 1.0 / std::sqrt(d + 1.0);
}

Regime classify(int d, const DeltaValue& delta) {
  check_dim(d, 1, "classify");
  if (delta.critical_dim()) {
    if (*delta.critical_dim() != d) throw ContractViolation("classify: critical delta built for another dimension");
    return Regime::critical;
  }
  const double gap = delta.squared() - 1.0 / (d + 1.0);
  if (std::abs(gap) <= kRegimeTolerance) return Regime::critical;
  return gap < 0.0 ? Regime::below_critical : Regime::above_critical;
}

Point circumcenter(int d, const DeltaValue& delta) {
  check_dim(d, 1, "circumcenter");
  check_delta(d, delta, true, "circumcenter");
  const double s = delta.squared();
  Point c(d);
  for (int j = 1; j <= d; ++j) c[j - 1] = delta.value() / 2.0 + (1.0 - s) * (2.0 * j - 1.0 - d) / (2.0 * d);
  return c;
}

double circumradius(int d, const DeltaValue& delta) {
  check_dim(d, 1, "circumradius");
  check_delta(d, delta, true, "circumradius");
  const double s = delta.squared();
  return std::sqrt(s * d / 4.0 + (1.0 - s) * (1.0 - s) * (static_cast<double>(d) * d - 1.0) / (12.0 * d));
}

std::vector<double> barycentric_weights(int d, const DeltaValue& delta) {
  check_dim(d, 1, "barycentric_weights");
  check_delta(d, delta, true, "barycentric_weights");
  const double s = delta.squared();
  std::vector<double> mu(d + 1, (1.0 - s) / d);
  mu.front() = mu.back() = (1.0 + (d - 1.0) * s) / (2.0 * d);
  return mu;
}

std::vector<double> heights(int d, const DeltaValue& delta) {
  check_dim(d, 1, "heights");
  check_delta(d, delta, false, "heights");
  const double s = delta.squared();
  std::vector<double> h(d + 1, 1.0 / std::sqrt(2.0));
  h.front() = h.back() = delta.value() * std::sqrt(static_cast<double>(d)) / std::sqrt(s * d - s + 1.0);
  return h;
}

double edge_length(int d, const DeltaValue& delta, int x) {
  check_dim(d, 1, "edge_length");
  if (x < 1 || x > d) throw ContractViolation("edge_length: index gap must lie in [1, d]");
  const double s = delta.squared();
  return std::sqrt((static_cast<double>(d) * x - (1.0 - s) * x * x) / d);
}

double longest_edge(int d, const DeltaValue& delta) {
  check_dim(d, 1, "longest_edge");
  check_delta(d, delta, false, "longest_edge");
  const double s = delta.squared();
  if (s >= 1.0) return edge_length(d, delta, d);
  const double vertex = d / (2.0 * (1.0 - s));
  const int lo = std::clamp(static_cast<int>(std::floor(vertex)), 1, d);
  const int hi = std::clamp(lo + 1, 1, d);
  return std::max(edge_length(d, delta, lo), edge_length(d, delta, hi));
}

double longest_edge_continuous(int d, const DeltaValue& delta) {
  check_dim(d, 1, "longest_edge_continuous");
  check_delta(d, delta, false, "longest_edge_continuous");
  const double s = delta.squared();
  const double rd = std::sqrt(static_cast<double>(d));
  return s >= 0.5 ? delta.value() * rd : rd / (2.0 * std::sqrt(1.0 - s));
}

double thickness(int d, const DeltaValue& delta) {
  const std::vector<double> h = heights(d, delta);
  return *std::min_element(h.begin(), h.end()) / longest_edge(d, delta);
}

double thickness_continuous(int d, const DeltaValue& delta) {
  check_dim(d, 2, "thickness_continuous");
  check_delta(d, delta, false, "thickness_continuous");
  const double s = delta.squared();
  const double v = delta.value();
  if (s >= 0.5) return 1.0 / (v * std::sqrt(2.0 * d));
  if (classify(d, delta) != Regime::below_critical) return std::sqrt(2.0 - 2.0 * s) / std::sqrt(static_cast<double>(d));
  return 2.0 * v * std::sqrt(1.0 - s) / std::sqrt(s * d - s + 1.0);
}

double aspect(int d, const DeltaValue& delta) {
  check_dim(d, 1, "aspect");
  check_delta(d, delta, false, "aspect");
  if (d == 1) return 1.0;
  const double s = delta.squared();
  const double dd = static_cast<double>(d) * d;
  const double radial = std::sqrt(3.0 * s * dd + (1.0 - s) * (1.0 - s) * (dd - 1.0));
  if (classify(d, delta) != Regime::below_critical) return std::sqrt(3.0 * d) / (std::sqrt(2.0) * radial);
  return delta.value() * d * std::sqrt(3.0) / (std::sqrt(s * d - s + 1.0) * radial);
}

PowerProtection power_protection(int d, const DeltaValue& delta) {
  check_dim(d, 2, "power_protection");
  check_delta(d, delta, false, "power_protection");
  const double s = delta.squared();
  return {2.0 * s, 2.0 / d * (1.0 - s)};
}

ProtectionCandidates protection_candidates(int d, const DeltaValue& delta) {
  check_dim(d, 2, "protection_candidates");
  check_delta(d, delta, false, "protection_candidates");
  const Point center = circumcenter(d, delta);
  const double radius = circumradius(d, delta);
  const DistortionParams params{d, delta.value()};

  ProtectionCandidates out;
  for (const LatticeCoords& p : opposite_set(canonical_simplex(d)).points) {
    const double dist = norm(distort(to_point(p), params) - center);
    out.raw.push_back(dist - radius);
    out.power.push_back(dist * dist - radius * radius);
  }
  if (!approx_equal(out.raw.front(), out.raw.back()))
    throw std::logic_error("protection_candidates: D_0 and D_d differ");
  for (int i = 2; i < d; ++i) {
    if (!approx_equal(out.raw[i], out.raw[1]))
      throw std::logic_error("protection_candidates: middle candidates differ");
  }
  return out;
}

double protection_above_critical(int d, const DeltaValue& delta) {
  check_dim(d, 2, "protection_above_critical");
  const double s = delta.squared();
  return std::sqrt(twelve_d_mid_sq(d, s) / (12.0 * d)) - std::sqrt(twelve_d_radius_sq(d, s) / (12.0 * d));
}

double protection_below_critical(int d, const DeltaValue& delta) {
  check_dim(d, 2, "protection_below_critical");
  const double s = delta.squared();
  return std::sqrt(twelve_d_end_sq(d, s) / (12.0 * d)) - std::sqrt(twelve_d_radius_sq(d, s) / (12.0 * d));
}

double protection_at_critical(int d) {
  check_dim(d, 1, "protection_at_critical");
  const double r2 = astar_radius_sq(d);
  return std::sqrt(r2 + 2.0 / (d + 1.0)) - std::sqrt(r2);
}

double protection(int d, const DeltaValue& delta) {
  check_dim(d, 2, "protection");
  check_delta(d, delta, false, "protection");
  switch (classify(d, delta)) {
    case Regime::above_critical: return protection_above_critical(d, delta);
    case Regime::critical: return protection_at_critical(d);
    case Regime::below_critical: return protection_below_critical(d, delta);
  }
  return 0.0;
}

double normalized_protection(int d, const DeltaValue& delta) {
  return protection(d, delta) / circumradius(d, delta);
}

double normalized_protection_ratio_form(int d, const DeltaValue& delta) {
  check_dim(d, 2, "normalized_protection_ratio_form");
  check_delta(d, delta, false, "normalized_protection_ratio_form");
  const double s = delta.squared();
  const double dd = static_cast<double>(d) * d;
  switch (classify(d, delta)) {
    case Regime::above_critical: return std::sqrt(twelve_d_mid_sq(d, s) / twelve_d_radius_sq(d, s)) - 1.0;
    case Regime::critical: return std::sqrt((dd + 2.0 * d + 24.0) / (dd + 2.0 * d)) - 1.0;
    case Regime::below_critical: return std::sqrt(twelve_d_end_sq(d, s) / twelve_d_radius_sq(d, s)) - 1.0;
  }
  return 0.0;
}

double normalized_protection_approximation(int d, const DeltaValue& delta) {
  check_dim(d, 2, "normalized_protection_approximation");
  check_delta(d, delta, false, "normalized_protection_approximation");
  const double s = delta.squared();
  const double dd = static_cast<double>(d) * d;
  switch (classify(d, delta)) {
    case Regime::above_critical: return 24.0 * (1.0 - s) / (dd * (s * s + s + 1.0));
    case Regime::critical: return 24.0 / dd;
    case Regime::below_critical: return 24.0 * s / (d * (s * s + s + 1.0));
  }
  return 0.0;
}

CanonicalSimplexGeometry canonical_geometry(int d, const DeltaValue& delta) {
  return {d,
          delta.value(),
          circumcenter(d, delta),
          circumradius(d, delta),
          barycentric_weights(d, delta),
          heights(d, delta),
          longest_edge(d, delta)};
}

QualityRecord quality_record(int d, const DeltaValue& delta) {
  const PowerProtection power = power_protection(d, delta);
  const double radius = circumradius(d, delta);
  const double prot = protection(d, delta);
  return {d,          delta.value(),           classify(d, delta), prot, prot / radius, power.end, power.mid,
          thickness(d, delta), aspect(d, delta), radius};
}

PermutahedralConstants permutahedral_constants(int d) {
  check_dim(d, 1, "permutahedral_constants");
  const double r2 = astar_radius_sq(d);
  const double dd = static_cast<double>(d) * d;
  Point s(d + 1);
  for (int j = 0; j <= d; ++j) s[j] = (d - 2.0 * j) / (2.0 * (d + 1.0));
  const double r_del = std::sqrt(r2);
  const double r_out = std::sqrt(r2 + 2.0 / (d + 1.0));
  return {d,
          r_del,
          r_out,
          r_out - r_del,
          std::sqrt((dd + 2.0 * d + 24.0) / (dd + 2.0 * d)) - 1.0,
          2.0 / (d + 1.0),
          std::move(s)};
}

}  // namespace distlat
