#pragma once

#include <iosfwd>
#include <span>
#include <string>

#include "distlat/closed_forms.hpp"
#include "distlat/report.hpp"

namespace distlat {

/// Header line of the sweep CSV, without the trailing newline.
inline constexpr const char* kSweepCsvHeader =
    "d,delta,regime,protection,normalized_protection,power_end,power_mid,thickness,aspect,circumradius";

/// printf("%.12g"): 12 significant digits, locale independent, byte-stable.
std::string format_number(double value);

/// Header plus one row per record, in the order given.
void write_sweep_csv(std::ostream& os, std::span<const QualityRecord> records);

/// "name = value" lines.
std::string to_text(const QualityRecord& record);

/// First line "PASS|FAIL <claim>", then parameters, comparisons and notes.
std::string to_text(const OracleReport& report);

/// Structured documents (JSON). Non-finite numbers serialize as null.
std::string to_json(std::span<const QualityRecord> records, int indent = 2);
std::string to_json(std::span<const OracleReport> reports, int indent = 2);

}  // namespace distlat
