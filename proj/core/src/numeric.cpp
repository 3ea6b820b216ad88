#include "distlat/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>

namespace distlat {

bool approx_equal(double a, double b, double tol) {
  return std::abs(a - b) <= tol * (1.0 + std::max(std::abs(a), std::abs(b)));
}

double relative_difference(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  const double diff = std::abs(a - b);
  return scale < 1e-300 ? diff : diff / scale;
}

double tolerance_from_environment(double fallback) {
  const char* raw = std::getenv(kToleranceEnvVar);
  if (raw == nullptr) return fallback;
  try {
    std::size_t used = 0;
    const double value = std::stod(raw, &used);
    if (used == std::string(raw).size() && std::isfinite(value) && value > 0.0) return value;
  } catch (const std::exception&) {
  }
  return fallback;
}

std::uint64_t factorial(int n) {
  std::uint64_t out = 1;
  for (int i = 2; i <= n; ++i) out *= static_cast<std::uint64_t>(i);
  return out;
}

}  // namespace distlat
