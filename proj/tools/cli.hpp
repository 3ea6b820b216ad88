#pragma once

#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "distlat/closed_forms.hpp"

namespace distlat::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2 };

/// Thrown for malformed or out-of-range arguments; maps to kUsage.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Parses one delta token for dimension d: a number in (0, 1] or `crit` (1/sqrt(d+1)).
DeltaValue parse_delta(const std::string& token, int d);

/// A sweep grid: comma-separated items, each a number, `start:stop:step` (stop inclusive)
/// or `crit`.
struct DeltaGrid {
  std::vector<double> values;
  bool include_critical = false;
};

DeltaGrid parse_delta_grid(const std::string& spec);

/// Runs the tool; args excludes the program name.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace distlat::cli
