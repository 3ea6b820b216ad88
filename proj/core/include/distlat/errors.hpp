#pragma once

#include <stdexcept>
#include <string>

namespace distlat {

/// Caller broke a documented precondition (dimension mismatch, parameter out of range).
class ContractViolation : public std::invalid_argument {
 public:
  explicit ContractViolation(const std::string& what) : std::invalid_argument(what) {}
};

/// A simplex, facet or basis is (numerically) rank-deficient.
class DegeneracyError : public std::runtime_error {
 public:
  explicit DegeneracyError(const std::string& what) : std::runtime_error(what) {}
};

/// An enumeration would exceed its work budget.
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace distlat
