// twrelay: BLER / throughput sweeps for correlated two-way relay schemes.
//
//   twrelay sweep    --scheme scpnc --code 15,5 --snr-db 0:14:2 --out curve.csv
//   twrelay analytic --scheme rcpnc --code 15,7 --snr-db 0:30:1 --format json
//   twrelay selftest
//
// Options may also come from a flat "key = value" file via --config; flags on
// the command line win.
//
// Exit codes: 0 ok, 1 selftest failure, 2 bad configuration, 3 I/O error.

#include <CLI11.hpp>

#include <exception>
#include <iostream>
#include <string>
#include <thread>

#include "twrelay/simkit.hpp"

using namespace twrelay;

namespace {

constexpr int kExitSelftest = 1;
constexpr int kExitConfig = 2;
constexpr int kExitIo = 3;

struct CliArgs {
  std::string scheme = "scpnc";
  std::string code = "15,5";
  std::string snr_db = "0:14:2";
  std::uint64_t seed = 1;
  std::string out;
  std::string format = "csv";
  std::uint64_t min_trials = 10'000;
  std::uint64_t max_trials = 1'000'000;
  double target_ci = 0.05;
  std::size_t workers = 0;
};

simkit::SweepConfig to_config(const CliArgs& a) {
  simkit::SweepConfig c;
  const auto kind = parse_scheme(a.scheme);
  if (!kind) throw std::invalid_argument("unknown scheme '" + a.scheme + "' (scpnc, rcpnc, conv)");
  c.scheme = *kind;
  std::tie(c.n, c.k) = simkit::parse_code(a.code);
  c.snr_db_grid = simkit::parse_snr_grid(a.snr_db);
  c.master_seed = a.seed;
  c.output_path = a.out;
  const auto fmt = simkit::parse_format(a.format);
  if (!fmt) throw std::invalid_argument("unknown format '" + a.format + "' (csv, json)");
  c.output_format = *fmt;
  c.min_trials = a.min_trials;
  c.max_trials = a.max_trials;
  c.target_relative_ci = a.target_ci;
  c.validate();
  return c;
}

void progress(const simkit::SweepPoint& p) {
  std::cerr << "  " << to_string(p.scheme) << " (" << p.n << "," << p.k << ") " << p.snr_db << " dB: " << p.trials
            << " trials, BLER " << p.bler_sim << " (closed form " << p.bler_exact << ")\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Link-level simulation of correlated two-way relay schemes (SCPNC, RCPNC, conventional PNC)"};
  app.require_subcommand(1);
  app.set_config("--config", "", "Flat key = value file; command-line flags override it");

  CliArgs args;
  app.add_option("--scheme", args.scheme, "scpnc | rcpnc | conv")->capture_default_str();
  app.add_option("--code", args.code, "BCH code n,k: 15,5 | 15,7 | 15,11")->capture_default_str();
  app.add_option("--snr-db", args.snr_db, "SNR grid a:b:step or a comma list, in dB")->capture_default_str();
  app.add_option("--seed", args.seed, "Master seed")->capture_default_str();
  app.add_option("--out", args.out, "Output file (default standard output)");
  app.add_option("--format", args.format, "csv | json")->capture_default_str();
  app.add_option("--min-trials", args.min_trials, "Trials before the CI target is checked")->capture_default_str();
  app.add_option("--max-trials", args.max_trials, "Trial cap per SNR point")->capture_default_str();
  app.add_option("--target-ci", args.target_ci, "Target Wilson half-width relative to the BLER")->capture_default_str();
  app.add_option("--workers", args.workers, "Worker threads (0 = all cores)")->capture_default_str();

  auto* sweep = app.add_subcommand("sweep", "Monte Carlo sweep with closed-form columns")->fallthrough();
  auto* analytic = app.add_subcommand("analytic", "Closed-form and asymptotic curves only")->fallthrough();
  auto* selftest = app.add_subcommand("selftest", "Quick invariant checks")->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  if (selftest->parsed()) {
    return simkit::run_selftest(std::cout) ? 0 : kExitSelftest;
  }

  simkit::SweepConfig config;
  try {
    config = to_config(args);
  } catch (const std::exception& e) {
    std::cerr << "twrelay: configuration error: " << e.what() << '\n';
    return kExitConfig;
  }

  std::vector<simkit::SweepPoint> points;
  try {
    if (sweep->parsed()) {
      simkit::RunOptions opts;
      opts.workers = args.workers == 0 ? std::max(1u, std::thread::hardware_concurrency()) : args.workers;
      opts.on_point = progress;
      std::cerr << "twrelay: sweeping " << config.snr_db_grid.size() << " points with " << opts.workers
                << " worker(s)\n";
      points = simkit::run_sweep(config, opts);
    } else if (analytic->parsed()) {
      points = simkit::analytic_sweep(config);
    }
  } catch (const std::exception& e) {
    std::cerr << "twrelay: configuration error: " << e.what() << '\n';
    return kExitConfig;
  }

  try {
    simkit::emit(points, config.output_format, config.output_path);
  } catch (const std::exception& e) {
    std::cerr << "twrelay: " << e.what() << '\n';
    return kExitIo;
  }
  return 0;
}
