#include "twrelay/simkit.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <boost/math/distributions/normal.hpp>
#include <json.hpp>

#include "twrelay/analytics.hpp"
#include "twrelay/block_code.hpp"
#include "twrelay/random.hpp"
#include "twrelay/sources.hpp"

namespace twrelay::simkit {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr std::uint64_t kBatchTrials = 1000;

double z_for(double confidence) {
  if (!(confidence > 0.0 && confidence < 1.0)) throw std::invalid_argument("confidence must lie in (0, 1)");
  return boost::math::quantile(boost::math::normal_distribution<double>(), 0.5 + confidence / 2.0);
}

std::string format_double(double v) {
  if (std::isnan(v)) return {};
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

double parse_double(std::string_view s) {
  if (s.empty()) return kNaN;
  double v = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
    throw std::invalid_argument("not a number: '" + std::string(s) + "'");
  }
  return v;
}

template <typename Int>
Int parse_int(std::string_view s) {
  Int v{};
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
    throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
  }
  return v;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  for (;;) {
    const auto pos = s.find(sep);
    out.push_back(s.substr(0, pos));
    if (pos == std::string_view::npos) break;
    s.remove_prefix(pos + 1);
  }
  return out;
}

TrialTally run_batch(const SweepConfig& config, const LinearBlockCode& code, const CorrelationModel& model,
                     const phy::ChannelParams& params, std::uint64_t point_index, std::uint64_t batch_index,
                     std::uint64_t count) {
  RandomStream rng = derive_stream(config.master_seed, point_index, batch_index);
  TrialTally tally;
  for (std::uint64_t i = 0; i < count; ++i) {
    const auto pair = model.generate_pair(rng);
    tally.add(run_trial(config.scheme, code, params, pair, rng));
  }
  return tally;
}

SweepPoint make_point(const SweepConfig& config, double snr_db) {
  const auto params = phy::ChannelParams::from_snr_db(snr_db);
  SweepPoint p;
  p.snr_db = snr_db;
  p.scheme = config.scheme;
  p.n = config.n;
  p.k = config.k;
  p.bler_exact = analytics::bler_exact(config.scheme, params, config.n, config.k);
  p.bler_asym = analytics::bler_asymptotic(config.scheme, params, config.n, config.k);
  return p;
}

void finish_point(SweepPoint& p, const TrialTally& tally, const SymbolBudget& budget) {
  const double z = z_for(0.95);
  p.trials = tally.trials;
  p.bler_sim = static_cast<double>(tally.errors_1to2) / static_cast<double>(tally.trials);
  std::tie(p.bler_ci_low, p.bler_ci_high) = wilson_interval(tally.errors_1to2, tally.trials);
  p.throughput = tally.throughput(p.n);

  const double scale = static_cast<double>(p.n) / static_cast<double>(budget.uplink + budget.downlink);
  const double nt = static_cast<double>(tally.trials);
  const double mean = static_cast<double>(tally.successes) / nt;
  const double var = tally.trials > 1
                         ? std::max(0.0, (static_cast<double>(tally.successes_squared) - nt * mean * mean) / (nt - 1.0))
                         : 0.0;
  const double half = z * std::sqrt(var / nt) * scale;
  p.throughput_ci_low = std::max(0.0, p.throughput - half);
  p.throughput_ci_high = std::min(2.0 * scale, p.throughput + half);
}

bool converged(const SweepConfig& config, const TrialTally& tally) {
  if (tally.trials >= config.max_trials) return true;
  if (tally.trials < config.min_trials || tally.errors_1to2 == 0) return false;
  const auto [lo, hi] = wilson_interval(tally.errors_1to2, tally.trials);
  const double p = static_cast<double>(tally.errors_1to2) / static_cast<double>(tally.trials);
  return (hi - lo) / 2.0 <= config.target_relative_ci * p;
}

}  // namespace

std::optional<OutputFormat> parse_format(std::string_view text) {
  if (text == "csv") return OutputFormat::Csv;
  if (text == "json") return OutputFormat::Json;
  return std::nullopt;
}

void SweepConfig::validate() const {
  if (snr_db_grid.empty()) throw std::invalid_argument("SNR grid is empty");
  for (std::size_t i = 0; i < snr_db_grid.size(); ++i) {
    if (!std::isfinite(snr_db_grid[i])) throw std::invalid_argument("SNR grid contains a non-finite value");
    if (i > 0 && !(snr_db_grid[i] > snr_db_grid[i - 1])) {
      throw std::invalid_argument("SNR grid must be strictly increasing");
    }
  }
  if (max_trials == 0) throw std::invalid_argument("max_trials must be positive");
  if (min_trials > max_trials) throw std::invalid_argument("min_trials exceeds max_trials");
  if (!(target_relative_ci > 0.0 && target_relative_ci < 1.0)) {
    throw std::invalid_argument("target_relative_ci must lie in (0, 1)");
  }
  (void)make_bch(n, k);
}

std::vector<double> parse_snr_grid(std::string_view text) {
  text = trim(text);
  std::vector<double> grid;
  if (text.find(':') != std::string_view::npos) {
    const auto parts = split(text, ':');
    if (parts.size() != 3) throw std::invalid_argument("SNR range must be start:stop:step");
    const double start = parse_double(trim(parts[0]));
    const double stop = parse_double(trim(parts[1]));
    const double step = parse_double(trim(parts[2]));
    if (!(step > 0.0) || !(stop >= start)) throw std::invalid_argument("SNR range needs step > 0 and stop >= start");
    const auto count = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
    for (std::size_t i = 0; i < count; ++i) grid.push_back(start + static_cast<double>(i) * step);
  } else {
    for (auto part : split(text, ',')) grid.push_back(parse_double(trim(part)));
  }
  return grid;
}

std::pair<std::size_t, std::size_t> parse_code(std::string_view text) {
  const auto parts = split(trim(text), ',');
  if (parts.size() != 2) throw std::invalid_argument("code must be given as n,k");
  return {parse_int<std::size_t>(trim(parts[0])), parse_int<std::size_t>(trim(parts[1]))};
}

std::pair<double, double> wilson_interval(std::uint64_t successes, std::uint64_t trials, double confidence) {
  if (trials == 0) throw std::invalid_argument("wilson_interval: trials must be positive");
  if (successes > trials) throw std::invalid_argument("wilson_interval: successes exceed trials");
  const double z = z_for(confidence);
  const double n = static_cast<double>(trials);
  const double p = static_cast<double>(successes) / n;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double center = (p + z2 / (2.0 * n)) / denom;
  const double half = z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
  // The bounds are exactly 0 and 1 at the extremes; rounding would leave a hair off.
  const double lo = successes == 0 ? 0.0 : std::max(0.0, center - half);
  const double hi = successes == trials ? 1.0 : std::min(1.0, center + half);
  return {lo, hi};
}

void TrialTally::add(const TrialOutcome& outcome) {
  ++trials;
  errors_1to2 += outcome.ok_1to2 ? 0 : 1;
  errors_2to1 += outcome.ok_2to1 ? 0 : 1;
  const auto s = static_cast<std::uint64_t>(outcome.successes());
  successes += s;
  successes_squared += s * s;
  symbols += outcome.total_symbols();
}

void TrialTally::merge(const TrialTally& other) {
  trials += other.trials;
  errors_1to2 += other.errors_1to2;
  errors_2to1 += other.errors_2to1;
  successes += other.successes;
  successes_squared += other.successes_squared;
  symbols += other.symbols;
}

double TrialTally::throughput(std::size_t n) const {
  if (symbols == 0) throw std::invalid_argument("throughput: no symbols recorded");
  return static_cast<double>(successes) / (static_cast<double>(symbols) / static_cast<double>(n));
}

double measure_throughput(std::span<const TrialOutcome> outcomes, std::size_t n) {
  if (outcomes.empty()) throw std::invalid_argument("measure_throughput: no outcomes");
  TrialTally tally;
  for (const auto& o : outcomes) tally.add(o);
  return tally.throughput(n);
}

std::vector<SweepPoint> run_sweep(const SweepConfig& config, const RunOptions& options) {
  config.validate();
  const LinearBlockCode code = make_bch(config.n, config.k);
  const CorrelationModel model(config.n, code.t());
  const SymbolBudget budget = symbol_budget(config.scheme, config.n, config.k);
  const std::size_t workers = std::max<std::size_t>(1, options.workers);

  std::vector<SweepPoint> points;
  for (std::size_t point_index = 0; point_index < config.snr_db_grid.size(); ++point_index) {
    const double snr_db = config.snr_db_grid[point_index];
    const auto params = phy::ChannelParams::from_snr_db(snr_db);
    SweepPoint point = make_point(config, snr_db);

    TrialTally total;
    std::uint64_t next_batch = 0;
    bool done = false;
    while (!done) {
      // Launch up to `workers` consecutive batches, then fold them in index
      // order; batches past the stopping point are discarded.
      struct Job {
        std::uint64_t batch;
        std::uint64_t count;
        TrialTally result;
      };
      std::vector<Job> jobs;
      for (std::size_t w = 0; w < workers; ++w) {
        const std::uint64_t start = next_batch * kBatchTrials;
        if (start >= config.max_trials) break;
        jobs.push_back({next_batch, std::min(kBatchTrials, config.max_trials - start), {}});
        ++next_batch;
      }
      auto work = [&](Job& job) {
        job.result = run_batch(config, code, model, params, point_index, job.batch, job.count);
      };
      std::vector<std::jthread> threads;
      for (std::size_t j = 1; j < jobs.size(); ++j) threads.emplace_back([&, j] { work(jobs[j]); });
      work(jobs.front());
      threads.clear();

      for (const auto& job : jobs) {
        total.merge(job.result);
        if (converged(config, total)) {
          done = true;
          break;
        }
      }
    }
    finish_point(point, total, budget);
    if (options.on_point) options.on_point(point);
    points.push_back(point);
  }
  return points;
}

std::vector<SweepPoint> analytic_sweep(const SweepConfig& config) {
  config.validate();
  const SymbolBudget budget = symbol_budget(config.scheme, config.n, config.k);
  const double scale = static_cast<double>(config.n) / static_cast<double>(budget.uplink + budget.downlink);
  std::vector<SweepPoint> points;
  for (double snr_db : config.snr_db_grid) {
    SweepPoint p = make_point(config, snr_db);
    p.trials = 0;
    p.bler_sim = p.bler_ci_low = p.bler_ci_high = kNaN;
    p.throughput = 2.0 * (1.0 - p.bler_exact) * scale;
    p.throughput_ci_low = p.throughput_ci_high = kNaN;
    points.push_back(p);
  }
  return points;
}

void write_csv(std::ostream& out, std::span<const SweepPoint> points) {
  out << kCsvHeader << '\n';
  for (const auto& p : points) {
    out << format_double(p.snr_db) << ',' << to_string(p.scheme) << ',' << std::to_string(p.n) << ',' << std::to_string(p.k) << ','
        << std::to_string(p.trials) << ','
        << format_double(p.bler_sim) << ',' << format_double(p.bler_ci_low) << ',' << format_double(p.bler_ci_high)
        << ',' << format_double(p.bler_exact) << ',' << format_double(p.bler_asym) << ','
        << format_double(p.throughput) << ',' << format_double(p.throughput_ci_low) << ','
        << format_double(p.throughput_ci_high) << '\n';
  }
}

void write_json(std::ostream& out, std::span<const SweepPoint> points) {
  auto num = [](double v) { return std::isnan(v) ? nlohmann::json(nullptr) : nlohmann::json(v); };
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& p : points) {
    arr.push_back({{"snr_db", p.snr_db},
                   {"scheme", to_string(p.scheme)},
                   {"n", p.n},
                   {"k", p.k},
                   {"trials", p.trials},
                   {"bler_sim", num(p.bler_sim)},
                   {"bler_ci_low", num(p.bler_ci_low)},
                   {"bler_ci_high", num(p.bler_ci_high)},
                   {"bler_exact", num(p.bler_exact)},
                   {"bler_asym", num(p.bler_asym)},
                   {"throughput", num(p.throughput)},
                   {"throughput_ci_low", num(p.throughput_ci_low)},
                   {"throughput_ci_high", num(p.throughput_ci_high)}});
  }
  out << arr.dump(2) << '\n';
}

std::vector<SweepPoint> read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || trim(line) != kCsvHeader) throw std::invalid_argument("read_csv: missing or unexpected header");
  std::vector<SweepPoint> points;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    const auto f = split(trim(line), ',');
    if (f.size() != 13) throw std::invalid_argument("read_csv: expected 13 fields, got " + std::to_string(f.size()));
    SweepPoint p;
    p.snr_db = parse_double(f[0]);
    const auto scheme = parse_scheme(f[1]);
    if (!scheme) throw std::invalid_argument("read_csv: unknown scheme '" + std::string(f[1]) + "'");
    p.scheme = *scheme;
    p.n = parse_int<std::size_t>(f[2]);
    p.k = parse_int<std::size_t>(f[3]);
    p.trials = parse_int<std::uint64_t>(f[4]);
    p.bler_sim = parse_double(f[5]);
    p.bler_ci_low = parse_double(f[6]);
    p.bler_ci_high = parse_double(f[7]);
    p.bler_exact = parse_double(f[8]);
    p.bler_asym = parse_double(f[9]);
    p.throughput = parse_double(f[10]);
    p.throughput_ci_low = parse_double(f[11]);
    p.throughput_ci_high = parse_double(f[12]);
    points.push_back(p);
  }
  return points;
}

std::vector<SweepPoint> read_json(std::istream& in) {
  const auto arr = nlohmann::json::parse(in);
  auto num = [](const nlohmann::json& v) { return v.is_null() ? kNaN : v.get<double>(); };
  std::vector<SweepPoint> points;
  for (const auto& o : arr) {
    SweepPoint p;
    p.snr_db = o.at("snr_db").get<double>();
    const auto scheme = parse_scheme(o.at("scheme").get<std::string>());
    if (!scheme) throw std::invalid_argument("read_json: unknown scheme");
    p.scheme = *scheme;
    p.n = o.at("n").get<std::size_t>();
    p.k = o.at("k").get<std::size_t>();
    p.trials = o.at("trials").get<std::uint64_t>();
    p.bler_sim = num(o.at("bler_sim"));
    p.bler_ci_low = num(o.at("bler_ci_low"));
    p.bler_ci_high = num(o.at("bler_ci_high"));
    p.bler_exact = num(o.at("bler_exact"));
    p.bler_asym = num(o.at("bler_asym"));
    p.throughput = num(o.at("throughput"));
    p.throughput_ci_low = num(o.at("throughput_ci_low"));
    p.throughput_ci_high = num(o.at("throughput_ci_high"));
    points.push_back(p);
  }
  return points;
}

void emit(std::span<const SweepPoint> points, OutputFormat format, const std::string& path) {
  auto write = [&](std::ostream& out) {
    if (format == OutputFormat::Csv) {
      write_csv(out, points);
    } else {
      write_json(out, points);
    }
  };
  if (path.empty() || path == "-") {
    write(std::cout);
    std::cout.flush();
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw std::runtime_error("cannot open output file '" + path + "' for writing");
  write(file);
  file.close();
  if (!file) throw std::runtime_error("failed writing output file '" + path + "'");
}

}  // namespace twrelay::simkit
