#include "distlat/report.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace distlat {

void OracleReport::compare(const std::string& name, double measured_value, double reference_value,
                           Scale scale) {
  measured.push_back({name, measured_value});
  reference.push_back({name, reference_value});
  const double dev = scale == Scale::relative ? relative_difference(measured_value, reference_value)
                                              : std::abs(measured_value - reference_value);
  max_deviation = std::isnan(dev) ? std::numeric_limits<double>::infinity()
                                  : std::max(max_deviation, dev);
}

void OracleReport::fail(const std::string& text) {
  max_deviation = std::numeric_limits<double>::infinity();
  notes.push_back(text);
}

OracleReport& OracleReport::finalize() {
  pass = max_deviation <= tolerance;
  return *this;
}

}  // namespace distlat
