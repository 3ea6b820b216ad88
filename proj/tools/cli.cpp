#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "distlat/errors.hpp"
#include "distlat/lattices.hpp"
#include "distlat/report_io.hpp"
#include "distlat/verification.hpp"

namespace distlat::cli {
namespace {

double parse_number(const std::string& token) {
  try {
    std::size_t used = 0;
    const double v = std::stod(token, &used);
    if (used != token.size() || !std::isfinite(v)) throw UsageError("not a number: '" + token + "'");
    return v;
  } catch (const std::logic_error&) {
    throw UsageError("not a number: '" + token + "'");
  }
}

void check_unit_interval(double v) {
  if (!(v > 0.0 && v <= 1.0)) throw UsageError("delta must lie in (0, 1], got " + format_number(v));
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream is(s);
  while (std::getline(is, item, sep)) parts.push_back(item);
  if (!s.empty() && s.back() == sep) parts.emplace_back();
  return parts;
}

void print_gram(std::ostream& out, const char* title, const GramMatrix& g) {
  out << title << '\n';
  for (std::size_t i = 0; i < g.size(); ++i) {
    out << "  [";
    for (std::size_t j = 0; j < g.size(); ++j) out << (j ? ", " : "") << format_number(g(i, j));
    out << "]\n";
  }
}

int finish(std::span<const OracleReport> reports, bool structured, std::ostream& out) {
  const bool all = std::all_of(reports.begin(), reports.end(), [](const OracleReport& r) { return r.pass; });
  if (structured) {
    out << to_json(reports) << '\n';
  } else {
    for (const OracleReport& r : reports) out << to_text(r);
    const auto passed = std::count_if(reports.begin(), reports.end(), [](const OracleReport& r) { return r.pass; });
    out << (all ? "PASS" : "FAIL") << ": " << passed << '/' << reports.size() << " checks passed\n";
  }
  return all ? kOk : kCheckFailed;
}

int cmd_measures(int d, const std::string& delta_token, bool structured, std::ostream& out) {
  if (d < 2) throw UsageError("--dim must be >= 2");
  const QualityRecord record = quality_record(d, parse_delta(delta_token, d));
  if (structured) {
    out << to_json(std::span(&record, 1)) << '\n';
  } else {
    out << to_text(record);
  }
  return kOk;
}

int cmd_sweep(const std::vector<int>& dims, const std::vector<std::string>& delta_specs, const std::string& output,
              bool structured, std::ostream& out) {
  if (dims.empty()) throw UsageError("--dims must name at least one dimension");
  for (int d : dims)
    if (d < 2) throw UsageError("--dims entries must be >= 2");
  DeltaGrid grid;
  for (const std::string& spec : delta_specs) {
    DeltaGrid part = parse_delta_grid(spec);
    grid.values.insert(grid.values.end(), part.values.begin(), part.values.end());
    grid.include_critical = grid.include_critical || part.include_critical;
  }
  if (grid.values.empty() && !grid.include_critical) throw UsageError("--delta selects no values");

  const std::vector<QualityRecord> records = figure_sweep(dims, grid.values, grid.include_critical);
  std::ostringstream body;
  if (structured) {
    body << to_json(records) << '\n';
  } else {
    write_sweep_csv(body, records);
  }
  if (output == "-") {
    out << body.str();
  } else {
    std::ofstream file(output, std::ios::binary);
    if (!file) throw UsageError("I/O error: cannot open '" + output + "' for writing");
    file << body.str();
    file.close();
    if (!file) throw UsageError("I/O error: failed writing '" + output + "'");
  }
  return kOk;
}

int cmd_verify(int d, const std::string& delta_token, int box, bool structured, std::ostream& out) {
  if (d < 2 || d > 6) throw UsageError("--dim must lie in [2, 6] for the brute-force oracles");
  if (box < 2) throw UsageError("--box must be >= 2");
  const DeltaValue delta = parse_delta(delta_token, d);
  const double tol = tolerance_from_environment();

  std::vector<OracleReport> reports;
  reports.push_back(protection_oracle(d, delta, box, tol));
  reports.push_back(uniform_protection_check(d, delta, box, tol));
  reports.push_back(minkowski_check(d, delta, 4, tol));
  reports.push_back(check_isometry_to_Ad(d, tol));
  if (classify(d, delta) == Regime::critical) reports.push_back(check_isometry_to_Astar_at_critical(d));
  return finish(reports, structured, out);
}

int cmd_isometry(int d, int box, bool structured, std::ostream& out) {
  if (d < 2) throw UsageError("--dim must be >= 2");
  if (box < 1 || box > 4) throw UsageError("--box must lie in [1, 4]");
  const double tol = tolerance_from_environment();

  std::vector<OracleReport> reports;
  reports.push_back(check_isometry_T0_to_Astar(d, box, tol));
  reports.push_back(check_isometry_to_Ad(d, tol));
  reports.push_back(check_isometry_to_Astar_at_critical(d));
  if (!structured) {
    print_gram(out, "Gram of T_gamma(Z^d), gamma = sqrt(d+1):", gram(distorted_grid_basis({d, std::sqrt(d + 1.0)})));
    print_gram(out, "Gram of A_d (basis e_1 - e_{i+1}):", gram(a_basis(d)));
    const PermutahedralConstants astar = permutahedral_constants(d);
    out << "R at critical delta = " << format_number(circumradius(d, DeltaValue::critical(d))) << '\n'
        << "R_del(A*_d)         = " << format_number(astar.delaunay_radius) << '\n';
  }
  return finish(reports, structured, out);
}

bool structured_format(const std::string& format) { return format == "structured" || format == "json"; }

}  // namespace

DeltaValue parse_delta(const std::string& token, int d) {
  if (token == "crit") return DeltaValue::critical(d);
  const double v = parse_number(token);
  check_unit_interval(v);
  return DeltaValue::of(v);
}

DeltaGrid parse_delta_grid(const std::string& spec) {
  DeltaGrid grid;
  for (const std::string& item : split(spec, ',')) {
    if (item.empty()) throw UsageError("empty item in delta list '" + spec + "'");
    if (item == "crit") {
      grid.include_critical = true;
      continue;
    }
    const std::vector<std::string> range = split(item, ':');
    if (range.size() == 1) {
      const double v = parse_number(item);
      check_unit_interval(v);
      grid.values.push_back(v);
    } else if (range.size() == 3) {
      const double start = parse_number(range[0]);
      const double stop = parse_number(range[1]);
      const double step = parse_number(range[2]);
      if (!(step > 0.0) || stop < start) throw UsageError("bad range '" + item + "': need start <= stop, step > 0");
      const auto count = static_cast<long>(std::floor((stop - start) / step + 1e-9)) + 1;
      if (count > 1000000) throw UsageError("range '" + item + "' has too many samples");
      for (long i = 0; i < count; ++i) {
        const double v = start + static_cast<double>(i) * step;
        check_unit_interval(v);
        grid.values.push_back(v);
      }
    } else {
      throw UsageError("bad delta item '" + item + "'");
    }
  }
  return grid;
}

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quality measures and brute-force checks for diagonally distorted lattices", "distlat"};
  app.require_subcommand(1);

  int dim = 0;
  std::string delta;
  std::string format = "text";
  int box = kDefaultOracleBox;

  auto* measures = app.add_subcommand("measures", "Protection, thickness and aspect ratio at one (d, delta)");
  measures->add_option("-d,--dim", dim, "Dimension d >= 2")->required();
  measures->add_option("--delta", delta, "Distortion in (0, 1] or 'crit'")->required();
  measures->add_option("--format", format, "text | structured")->check(CLI::IsMember({"text", "structured", "json"}));

  std::vector<int> dims;
  std::vector<std::string> delta_specs;
  std::string output = "-";
  std::string sweep_format = "csv";
  auto* sweep = app.add_subcommand("sweep", "Quality records over a (d, delta) grid");
  sweep->add_option("--dims", dims, "Dimensions, comma separated")->required()->delimiter(',');
  sweep->add_option("--delta", delta_specs, "Grid: numbers, start:stop:step, crit (comma separated, repeatable)")
      ->required();
  sweep->add_option("-o,--output", output, "Output file, '-' for stdout");
  sweep->add_option("--format", sweep_format, "csv | structured")->check(CLI::IsMember({"csv", "structured", "json"}));

  auto* verify = app.add_subcommand("verify", "Run the brute-force oracles at one (d, delta)");
  verify->add_option("-d,--dim", dim, "Dimension, 2..6")->required();
  verify->add_option("--delta", delta, "Distortion in (0, 1] or 'crit'")->required();
  verify->add_option("--box", box, "Enumeration box radius (>= 2)");
  verify->add_option("--format", format, "text | structured")->check(CLI::IsMember({"text", "structured", "json"}));

  int iso_box = 2;
  auto* isometry = app.add_subcommand("isometry", "Check the A_d / A*_d isometries");
  isometry->add_option("-d,--dim", dim, "Dimension d >= 2")->required();
  isometry->add_option("--box", iso_box, "Box radius for the T_0 set comparison, 1..4");
  isometry->add_option("--format", format, "text | structured")->check(CLI::IsMember({"text", "structured", "json"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "distlat: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*measures) return cmd_measures(dim, delta, structured_format(format), out);
    if (*sweep) return cmd_sweep(dims, delta_specs, output, structured_format(sweep_format), out);
    if (*verify) return cmd_verify(dim, delta, box, structured_format(format), out);
    if (*isometry) return cmd_isometry(dim, iso_box, structured_format(format), out);
  } catch (const UsageError& e) {
    err << "distlat: " << e.what() << '\n';
    return kUsage;
  } catch (const ContractViolation& e) {
    err << "distlat: " << e.what() << '\n';
    return kUsage;
  } catch (const ResourceError& e) {
    err << "distlat: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace distlat::cli
