#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "twrelay/schemes.hpp"

namespace twrelay::simkit {

enum class OutputFormat { Csv, Json };

std::optional<OutputFormat> parse_format(std::string_view text);

struct SweepConfig {
  SchemeKind scheme = SchemeKind::SCPNC;
  std::size_t n = 15;
  std::size_t k = 5;
  std::vector<double> snr_db_grid;
  std::uint64_t min_trials = 10'000;
  std::uint64_t max_trials = 1'000'000;
  double target_relative_ci = 0.05;
  std::uint64_t master_seed = 1;
  std::string output_path;  // empty or "-" means standard output
  OutputFormat output_format = OutputFormat::Csv;

  /// Throws std::invalid_argument describing the first violated constraint.
  void validate() const;
};

/// "a:b:step" (inclusive of b up to rounding) or a comma-separated list.
std::vector<double> parse_snr_grid(std::string_view text);
/// "n,k".
std::pair<std::size_t, std::size_t> parse_code(std::string_view text);

/// One row of a BLER / throughput curve. Simulated fields are NaN for
/// analytic-only points (trials == 0).
struct SweepPoint {
  double snr_db = 0.0;
  SchemeKind scheme = SchemeKind::SCPNC;
  std::size_t n = 0;
  std::size_t k = 0;
  std::uint64_t trials = 0;
  double bler_sim = 0.0;
  double bler_ci_low = 0.0;
  double bler_ci_high = 0.0;
  double bler_exact = 0.0;
  double bler_asym = 0.0;
  double throughput = 0.0;
  double throughput_ci_low = 0.0;
  double throughput_ci_high = 0.0;
};

/// Wilson score interval for a binomial proportion.
std::pair<double, double> wilson_interval(std::uint64_t successes, std::uint64_t trials, double confidence = 0.95);

/// Running totals over trials of one scheme.
struct TrialTally {
  std::uint64_t trials = 0;
  std::uint64_t errors_1to2 = 0;
  std::uint64_t errors_2to1 = 0;
  std::uint64_t successes = 0;          // sum of per-trial successful directions
  std::uint64_t successes_squared = 0;  // sum of their squares
  std::uint64_t symbols = 0;            // sum of uplink + downlink symbols

  void add(const TrialOutcome& outcome);
  void merge(const TrialTally& other);
  /// Correctly decoded blocks (both directions) per time slot of n symbols.
  double throughput(std::size_t n) const;
};

/// (sum of successful directions) / (sum of symbols / n). Throws on empty input.
double measure_throughput(std::span<const TrialOutcome> outcomes, std::size_t n);

struct RunOptions {
  std::size_t workers = 1;
  /// Called after each finished SNR point, from the calling thread.
  std::function<void(const SweepPoint&)> on_point;
};

/// Monte Carlo sweep. Trials run in fixed batches, each with a stream derived
/// from (master_seed, point index, batch index); the result is identical for
/// any worker count.
std::vector<SweepPoint> run_sweep(const SweepConfig& config, const RunOptions& options = {});

/// Closed-form curves only; simulated fields are NaN and throughput is the
/// expected value under the exact BLER.
std::vector<SweepPoint> analytic_sweep(const SweepConfig& config);

inline constexpr std::string_view kCsvHeader =
    "snr_db,scheme,n,k,trials,bler_sim,bler_ci_low,bler_ci_high,bler_exact,bler_asym,throughput,"
    "throughput_ci_low,throughput_ci_high";

void write_csv(std::ostream& out, std::span<const SweepPoint> points);
void write_json(std::ostream& out, std::span<const SweepPoint> points);
std::vector<SweepPoint> read_csv(std::istream& in);
std::vector<SweepPoint> read_json(std::istream& in);

/// Writes to `path`, or to standard output when path is empty or "-".
/// Throws std::runtime_error naming the path when it cannot be written.
void emit(std::span<const SweepPoint> points, OutputFormat format, const std::string& path);

/// Quick invariant checks of the whole stack; one line per check to `log`.
bool run_selftest(std::ostream& log);

}  // namespace twrelay::simkit
