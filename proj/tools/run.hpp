#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "fbmkl/estimator.hpp"
#include "fbmkl/galerkin.hpp"

namespace fbmkl::cli {

enum class Command { eigen, expand, project, transfer, estimate };
enum class Format { csv, json };

Command parse_command(const std::string& text);
std::string to_string(Command command);
Format parse_format(const std::string& text);

struct RunConfig {
  Command command = Command::eigen;
  double hurst = 0.5;
  std::optional<int> size;   // sine basis / Galerkin size
  std::optional<int> terms;  // Bessel-series terms
  std::uint64_t seed = 0;
  std::optional<FitRange> fit_range;
  std::string output_path = "-";
  Format format = Format::csv;
  // estimate only
  int paths = 400;
  int points = 256;
  DisturbanceKind disturbance = DisturbanceKind::none;
  double magnitude = 0.0;
};

/// Invalid configuration; the CLI maps it to exit status 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Throws ConfigError on out-of-range values.
void validate(const RunConfig& config);

using Cell = std::variant<long long, double, std::string>;

struct Table {
  std::string command;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

/// Runs the pipeline for `config` and returns its output table.
Table run_table(const RunConfig& config);

/// CSV (header row, comma separated, '\n') or JSON. Reals carry 12
/// significant digits in both, so the two formats hold identical values.
std::string render(const Table& table, Format format);

/// Validates, runs and writes the output (atomically, via a temporary file
/// and rename, unless the path is "-"). Returns 0 on success, 2 for
/// configuration errors and 1 for numerical failures; diagnostics go to
/// `diag`.
int run(const RunConfig& config, std::ostream& out, std::ostream& diag);

}  // namespace fbmkl::cli
