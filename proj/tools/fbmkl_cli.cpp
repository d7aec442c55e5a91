// Batch front-end: one pipeline per invocation, tabular output.
//
//   fbmkl eigen    --hurst 0.7 --size 256
//   fbmkl expand   --hurst 0.3 --terms 100 --format json
//   fbmkl project  --hurst 0.7 --size 32 --terms 2000 --output project.csv
//   fbmkl transfer --hurst 0.7 --size 64
//   fbmkl estimate --hurst 0.3 --paths 400 --disturbance noise --magnitude 0.01

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "run.hpp"

int main(int argc, char** argv) {
  using namespace fbmkl::cli;

  CLI::App app{"Karhunen-Loeve spectra of fractional Brownian motion"};
  std::string command;
  std::string format = "csv";
  std::string disturbance = "none";
  int size = 0;
  int terms = 0;
  int fit_lo = 0;
  int fit_hi = 0;
  RunConfig config;

  app.add_option("command", command, "eigen | expand | project | transfer | estimate")
      ->required();
  app.add_option("--hurst", config.hurst, "Hurst exponent in (0, 1)")->required();
  app.add_option("--size", size, "sine basis size N");
  app.add_option("--terms", terms, "Bessel-series terms K");
  app.add_option("--seed", config.seed, "first sample seed");
  app.add_option("--fit-lo", fit_lo, "first index of the decay fit");
  app.add_option("--fit-hi", fit_hi, "last index of the decay fit");
  app.add_option("--output,-o", config.output_path, "output file, '-' for stdout");
  app.add_option("--format", format, "csv | json");
  app.add_option("--paths", config.paths, "estimate: ensemble size M");
  app.add_option("--points", config.points, "estimate: grid points P");
  app.add_option("--disturbance", disturbance, "estimate: none | noise | trend");
  app.add_option("--magnitude", config.magnitude, "estimate: noise sigma or trend slope");

  try {
    app.parse(argc, argv);
    config.command = parse_command(command);
    config.format = parse_format(format);
    config.disturbance = fbmkl::parse_disturbance_kind(disturbance);
    if (app.count("--size")) config.size = size;
    if (app.count("--terms")) config.terms = terms;
    if (app.count("--fit-lo") || app.count("--fit-hi")) {
      if (!(app.count("--fit-lo") && app.count("--fit-hi"))) {
        throw ConfigError("--fit-lo and --fit-hi must be given together");
      }
      config.fit_range = fbmkl::FitRange{fit_lo, fit_hi};
    }
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "fbmkl: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "fbmkl: " << e.what() << '\n';
    return 2;
  }
  return run(config, std::cout, std::cerr);
}
