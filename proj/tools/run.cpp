#include "run.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "fbmkl/error.hpp"
#include "fbmkl/expansion.hpp"
#include "fbmkl/projection.hpp"
#include "fbmkl/riesz.hpp"

namespace fbmkl::cli {

namespace {

constexpr const char* kCommands[] = {"eigen", "expand", "project", "transfer", "estimate"};

int default_size(Command command) {
  switch (command) {
    case Command::project:
    case Command::transfer: return 64;
    default: return 256;
  }
}

int default_terms(Command command) {
  return command == Command::estimate ? kSamplingTerms : kCovarianceTerms;
}

FitRange default_fit(Command command, int size) {
  const FitRange preferred = command == Command::project ? FitRange{8, 48} : FitRange{8, 64};
  FitRange r{preferred.lo, std::min(preferred.hi, size)};
  r.lo = std::max(1, std::min(r.lo, r.hi - 4));
  return r;
}

std::string format_real(double v) {
  if (!std::isfinite(v)) return std::isnan(v) ? "nan" : (v > 0 ? "inf" : "-inf");
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.11e", v);
  return buf;
}

}  // namespace

Command parse_command(const std::string& text) {
  for (int i = 0; i < 5; ++i) {
    if (text == kCommands[i]) return static_cast<Command>(i);
  }
  throw ConfigError("unknown command '" + text +
                    "' (expected eigen, expand, project, transfer or estimate)");
}

std::string to_string(Command command) { return kCommands[static_cast<int>(command)]; }

Format parse_format(const std::string& text) {
  if (text == "csv") return Format::csv;
  if (text == "json") return Format::json;
  throw ConfigError("unknown format '" + text + "' (expected csv or json)");
}

void validate(const RunConfig& config) {
  if (!(config.hurst > 0.0 && config.hurst < 1.0)) {
    throw ConfigError("--hurst must lie in the open range (0, 1), got " +
                      format_real(config.hurst));
  }
  const int size = config.size.value_or(default_size(config.command));
  const int terms = config.terms.value_or(default_terms(config.command));
  if (size < 1) throw ConfigError("--size must be >= 1");
  if (terms < 1) throw ConfigError("--terms must be >= 1");
  if (config.command != Command::expand) {
    if (config.fit_range) {
      const FitRange r = *config.fit_range;
      if (r.lo < 1 || r.hi > size || r.hi - r.lo < 4) {
        throw ConfigError("--fit-lo/--fit-hi must satisfy 1 <= lo, hi <= size, hi - lo >= 4");
      }
    } else if (size < 5 && config.command != Command::estimate) {
      throw ConfigError("--size must be >= 5 to fit a decay exponent");
    }
  }
  if (config.command == Command::estimate) {
    if (config.points < 8) throw ConfigError("--points must be >= 8");
    if (config.paths < 2) throw ConfigError("--paths must be >= 2");
    if (!(config.magnitude >= 0.0)) throw ConfigError("--magnitude must be >= 0");
    if (size < 64) throw ConfigError("estimate: --size must be >= 64 for the spectrum fit");
  }
}

Table run_table(const RunConfig& config) {
  validate(config);
  const HurstParams params(config.hurst);
  const int size = config.size.value_or(default_size(config.command));
  const int terms = config.terms.value_or(default_terms(config.command));
  const FitRange range = config.fit_range.value_or(default_fit(config.command, size));

  Table table;
  table.command = to_string(config.command);
  switch (config.command) {
    case Command::eigen: {
      const GalerkinMatrix a = assemble(params, size, default_quadrature(size));
      const SpectralResult spectrum = eigen_spectrum(a);
      const AsymptoticFit fit = fit_asymptotics(spectrum, range);
      table.columns = {"n", "lambda_galerkin", "bronski_prediction", "fit_p", "fit_c"};
      for (int n = 1; n <= size; ++n) {
        table.rows.push_back({Cell{static_cast<long long>(n)}, spectrum[n],
                              bronski_prediction(params, n), fit.exponent_p, fit.prefactor_c});
      }
      break;
    }
    case Command::expand: {
      const ExpansionSpec spec = build_expansion(params, terms);
      table.columns = {"n", "x_n", "y_n", "var_z", "var_w"};
      for (int n = 0; n < terms; ++n) {
        table.rows.push_back({Cell{static_cast<long long>(n + 1)}, spec.x[n], spec.y[n],
                              spec.var_z[n], spec.var_w[n]});
      }
      break;
    }
    case Command::project: {
      const ExpansionSpec spec = build_expansion(params, terms);
      const ProjectionTable proj = build_projection(spec, size);
      const GalerkinMatrix a = assemble(params, size, default_quadrature(size));
      table.columns = {"n", "lambda_projection", "lambda_galerkin", "rel_diff", "tail_fraction"};
      for (int n = 1; n <= size; ++n) {
        const ProjectedMoment pm = projected_moment(n, n, proj);
        const double g = a(n, n);
        table.rows.push_back({Cell{static_cast<long long>(n)}, pm.value, g,
                              std::abs(pm.value - g) / std::abs(g), pm.tail_fraction});
      }
      break;
    }
    case Command::transfer: {
      const ExpansionSpec spec = build_expansion(params, terms);
      const ProjectionTable proj = build_projection(spec, size);
      const MappingMatrix mapping = build_mapping(proj);
      const std::vector<double> tau = source_moments(proj);
      const std::vector<double> lambda = transfer_eigenvalues(mapping, tau);
      const ArgmaxFit d7 = fit_argmax_rows(mapping, range);
      table.columns = {"n", "lambda_transfer", "k_star", "d7_fit", "d7_r_squared"};
      for (int n = 1; n <= size; ++n) {
        table.rows.push_back({Cell{static_cast<long long>(n)}, lambda[n - 1],
                              Cell{static_cast<long long>(argmax_column_row(mapping, n))},
                              d7.slope, d7.r_squared});
      }
      break;
    }
    case Command::estimate: {
      const GalerkinMatrix a = assemble(params, size, default_quadrature(size));
      const FitRange spectrum_range = config.fit_range.value_or(FitRange{8, 64});
      const HurstEstimate from_spectrum =
          hurst_from_spectrum(fit_asymptotics(eigen_spectrum(a), spectrum_range));
      const ExpansionSpec spec = build_expansion(params, terms);
      PathEnsemble ensemble = sample_ensemble(spec, config.paths, config.points, config.seed);
      ensemble = add_disturbance(ensemble, config.disturbance, config.magnitude,
                                 config.seed + static_cast<std::uint64_t>(config.paths));
      const HurstEstimate from_paths = pca_hurst(ensemble);
      table.columns = {"h_true", "h_spectrum", "h_pca", "disturbance", "magnitude", "error"};
      table.rows.push_back({config.hurst, from_spectrum.value, from_paths.value,
                            to_string(config.disturbance), config.magnitude,
                            std::abs(from_paths.value - config.hurst)});
      break;
    }
  }
  return table;
}

std::string render(const Table& table, Format format) {
  if (format == Format::csv) {
    std::ostringstream os;
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
      os << (c ? "," : "") << table.columns[c];
    }
    os << '\n';
    for (const auto& row : table.rows) {
      for (std::size_t c = 0; c < row.size(); ++c) {
        if (c) os << ',';
        std::visit(
            [&os](const auto& v) {
              using T = std::decay_t<decltype(v)>;
              if constexpr (std::is_same_v<T, double>) {
                os << format_real(v);
              } else {
                os << v;
              }
            },
            row[c]);
      }
      os << '\n';
    }
    return os.str();
  }

  nlohmann::ordered_json doc;
  doc["command"] = table.command;
  doc["columns"] = table.columns;
  doc["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json jrow = nlohmann::ordered_json::array();
    for (const Cell& cell : row) {
      std::visit(
          [&jrow](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, double>) {
              // Round through the CSV text so both formats carry one value.
              jrow.push_back(std::strtod(format_real(v).c_str(), nullptr));
            } else {
              jrow.push_back(v);
            }
          },
          cell);
    }
    doc["rows"].push_back(std::move(jrow));
  }
  return doc.dump(2) + "\n";
}

int run(const RunConfig& config, std::ostream& out, std::ostream& diag) {
  std::string text;
  try {
    text = render(run_table(config), config.format);
  } catch (const ConfigError& e) {
    diag << "fbmkl: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    diag << "fbmkl: " << to_string(config.command) << " failed: " << e.what() << '\n';
    return 1;
  }

  if (config.output_path == "-") {
    out << text;
    return 0;
  }
  namespace fs = std::filesystem;
  const fs::path target(config.output_path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    f << text;
    if (!f) {
      diag << "fbmkl: cannot write " << tmp << '\n';
      return 1;
    }
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    diag << "fbmkl: cannot move output into place: " << ec.message() << '\n';
    fs::remove(tmp, ec);
    return 1;
  }
  return 0;
}

}  // namespace fbmkl::cli
