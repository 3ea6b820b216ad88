#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <vector>

namespace distlat {

/// A point (or vector) of R^n with n >= 1 and finite coordinates.
class Point {
 public:
  explicit Point(std::size_t dim, double fill = 0.0);
  explicit Point(std::vector<double> coords);
  Point(std::initializer_list<double> coords);

  std::size_t dim() const { return coords_.size(); }
  double operator[](std::size_t i) const { return coords_[i]; }
  double& operator[](std::size_t i) { return coords_[i]; }
  std::span<const double> coords() const { return coords_; }

  Point& operator+=(const Point& other);
  Point& operator-=(const Point& other);
  Point& operator*=(double s);

  friend Point operator+(Point a, const Point& b) { return a += b; }
  friend Point operator-(Point a, const Point& b) { return a -= b; }
  friend Point operator*(Point a, double s) { return a *= s; }
  friend Point operator*(double s, Point a) { return a *= s; }

  /// Exact coordinate equality; use distance() with a tolerance for geometry.
  friend bool operator==(const Point&, const Point&) = default;

 private:
  std::vector<double> coords_;
};

double dot(const Point& a, const Point& b);
double squared_norm(const Point& a);
double norm(const Point& a);

/// Delta(x): sum of the coordinates.
double coordinate_sum(const Point& x);

/// Standard basis vector e_i (0-based index) of R^dim.
Point unit_vector(std::size_t dim, std::size_t i);

std::ostream& operator<<(std::ostream& os, const Point& p);

}  // namespace distlat
