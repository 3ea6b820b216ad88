#include "distlat/point.hpp"

#include <cmath>
#include <ostream>
#include <string>

#include "distlat/errors.hpp"

namespace distlat {
namespace {

void check_coords(const std::vector<double>& coords) {
  if (coords.empty()) throw ContractViolation("Point: dimension must be at least 1");
  for (double c : coords) {
    if (!std::isfinite(c)) throw ContractViolation("Point: coordinates must be finite");
  }
}

void check_same_dim(const Point& a, const Point& b) {
  if (a.dim() != b.dim()) {
    throw ContractViolation("dimension mismatch: " + std::to_string(a.dim()) + " vs " +
                            std::to_string(b.dim()));
  }
}

}  // namespace

Point::Point(std::size_t dim, double fill) : coords_(dim, fill) { check_coords(coords_); }

Point::Point(std::vector<double> coords) : coords_(std::move(coords)) { check_coords(coords_); }

Point::Point(std::initializer_list<double> coords) : coords_(coords) { check_coords(coords_); }

Point& Point::operator+=(const Point& other) {
  check_same_dim(*this, other);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

Point& Point::operator-=(const Point& other) {
  check_same_dim(*this, other);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
  return *this;
}

Point& Point::operator*=(double s) {
  for (double& c : coords_) c *= s;
  return *this;
}

double dot(const Point& a, const Point& b) {
  check_same_dim(a, b);
  double sum = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) sum += a[i] * b[i];
  return sum;
}

double squared_norm(const Point& a) { return dot(a, a); }

double norm(const Point& a) { return std::sqrt(squared_norm(a)); }

double coordinate_sum(const Point& x) {
  double sum = 0.0;
  for (double c : x.coords()) sum += c;
  return sum;
}

Point unit_vector(std::size_t dim, std::size_t i) {
  if (i >= dim) throw ContractViolation("unit_vector: index out of range");
  Point e(dim);
  e[i] = 1.0;
  return e;
}

std::ostream& operator<<(std::ostream& os, const Point& p) {
  os << '(';
  for (std::size_t i = 0; i < p.dim(); ++i) {
    if (i > 0) os << ", ";
    os << p[i];
  }
  return os << ')';
}

}  // namespace distlat
