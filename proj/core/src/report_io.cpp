#include "distlat/report_io.hpp"

#include <cmath>
#include <cstdio>
#include <nlohmann/json.hpp>
#include <ostream>
#include <sstream>

namespace distlat {
namespace {

nlohmann::json number(double v) { return std::isfinite(v) ? nlohmann::json(v) : nlohmann::json(nullptr); }

nlohmann::json record_json(const QualityRecord& r) {
  return {{"d", r.d},
          {"delta", number(r.delta)},
          {"regime", std::string(to_string(r.regime))},
          {"protection", number(r.protection)},
          {"normalized_protection", number(r.normalized_protection)},
          {"power_end", number(r.power_end)},
          {"power_mid", number(r.power_mid)},
          {"thickness", number(r.thickness)},
          {"aspect", number(r.aspect)},
          {"circumradius", number(r.circumradius)}};
}

nlohmann::json named_values(const std::vector<NamedValue>& values) {
  nlohmann::json out = nlohmann::json::array();
  for (const NamedValue& v : values) out.push_back({{"name", v.name}, {"value", number(v.value)}});
  return out;
}

nlohmann::json report_json(const OracleReport& r) {
  nlohmann::json out = {{"claim", r.claim},
                        {"d", r.dim},
                        {"delta", r.delta ? number(*r.delta) : nlohmann::json(nullptr)},
                        {"box", r.box ? nlohmann::json(*r.box) : nlohmann::json(nullptr)},
                        {"measured", named_values(r.measured)},
                        {"reference", named_values(r.reference)},
                        {"max_deviation", number(r.max_deviation)},
                        {"tolerance", number(r.tolerance)},
                        {"pass", r.pass},
                        {"minimizers", r.minimizers},
                        {"notes", r.notes}};
  return out;
}

}  // namespace

std::string format_number(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

void write_sweep_csv(std::ostream& os, std::span<const QualityRecord> records) {
  os << kSweepCsvHeader << '\n';
  for (const QualityRecord& r : records) {
    os << r.d << ',' << format_number(r.delta) << ',' << to_string(r.regime) << ',' << format_number(r.protection)
       << ',' << format_number(r.normalized_protection) << ',' << format_number(r.power_end) << ','
       << format_number(r.power_mid) << ',' << format_number(r.thickness) << ',' << format_number(r.aspect) << ','
       << format_number(r.circumradius) << '\n';
  }
}

std::string to_text(const QualityRecord& r) {
  std::ostringstream os;
  os << "d = " << r.d << '\n'
     << "delta = " << format_number(r.delta) << '\n'
     << "regime = " << to_string(r.regime) << '\n'
     << "protection = " << format_number(r.protection) << '\n'
     << "normalized_protection = " << format_number(r.normalized_protection) << '\n'
     << "power_end = " << format_number(r.power_end) << '\n'
     << "power_mid = " << format_number(r.power_mid) << '\n'
     << "thickness = " << format_number(r.thickness) << '\n'
     << "aspect = " << format_number(r.aspect) << '\n'
     << "circumradius = " << format_number(r.circumradius) << '\n';
  return os.str();
}

std::string to_text(const OracleReport& r) {
  std::ostringstream os;
  os << (r.pass ? "PASS " : "FAIL ") << r.claim << '\n';
  os << "  d = " << r.dim;
  if (r.delta) os << ", delta = " << format_number(*r.delta);
  if (r.box) os << ", box = " << *r.box;
  os << '\n';
  for (std::size_t i = 0; i < r.measured.size(); ++i)
    os << "  measured " << r.measured[i].name << " = " << format_number(r.measured[i].value) << '\n';
  for (std::size_t i = 0; i < r.reference.size(); ++i)
    os << "  reference " << r.reference[i].name << " = " << format_number(r.reference[i].value) << '\n';
  os << "  max_deviation = " << format_number(r.max_deviation) << " (tolerance " << format_number(r.tolerance)
     << ")\n";
  if (!r.minimizers.empty()) {
    os << "  minimizers:";
    for (const auto& m : r.minimizers) {
      os << " (";
      for (std::size_t i = 0; i < m.size(); ++i) os << (i ? "," : "") << m[i];
      os << ')';
    }
    os << '\n';
  }
  for (const std::string& n : r.notes) os << "  note: " << n << '\n';
  return os.str();
}

std::string to_json(std::span<const QualityRecord> records, int indent) {
  nlohmann::json rows = nlohmann::json::array();
  for (const QualityRecord& r : records) rows.push_back(record_json(r));
  return nlohmann::json{{"records", rows}}.dump(indent);
}

std::string to_json(std::span<const OracleReport> reports, int indent) {
  nlohmann::json rows = nlohmann::json::array();
  bool all = true;
  for (const OracleReport& r : reports) {
    rows.push_back(report_json(r));
    all = all && r.pass;
  }
  return nlohmann::json{{"pass", all}, {"reports", rows}}.dump(indent);
}

}  // namespace distlat
