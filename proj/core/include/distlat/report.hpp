#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "distlat/numeric.hpp"

namespace distlat {

struct NamedValue {
  std::string name;
  double value;
};

/// Outcome of one machine check. Self-describing: carries its parameters and the tolerance
/// used, and pass holds exactly when max_deviation <= tolerance. Structural failures (a wrong
/// minimizer set, a point inside an empty ball) set max_deviation to +infinity.
struct OracleReport {
  std::string claim;
  int dim = 0;
  std::optional<double> delta;
  std::optional<int> box;
  std::vector<NamedValue> measured;
  std::vector<NamedValue> reference;
  double max_deviation = 0.0;
  double tolerance = kDefaultTolerance;
  bool pass = false;
  std::vector<std::vector<std::int64_t>> minimizers;
  std::vector<std::string> notes;

  enum class Scale { absolute, relative };

  /// Records a measured/reference pair and folds its deviation into max_deviation.
  void compare(const std::string& name, double measured_value, double reference_value,
               Scale scale = Scale::absolute);
  /// Records a structural failure.
  void fail(const std::string& note);
  void note(std::string text) { notes.push_back(std::move(text)); }
  /// Sets pass from max_deviation and tolerance; call once all comparisons are in.
  OracleReport& finalize();
};

}  // namespace distlat
