#include <bit>
#include <cmath>
#include <ostream>
#include <string>

#include "twrelay/analytics.hpp"
#include "twrelay/block_code.hpp"
#include "twrelay/simkit.hpp"
#include "twrelay/sources.hpp"

namespace twrelay::simkit {

namespace {

class Checker {
 public:
  explicit Checker(std::ostream& log) : log_(log) {}

  void check(bool ok, const std::string& name) {
    log_ << (ok ? "[PASS] " : "[FAIL] ") << name << '\n';
    all_ok_ = all_ok_ && ok;
  }
  bool all_ok() const { return all_ok_; }

 private:
  std::ostream& log_;
  bool all_ok_ = true;
};

bool weight_le_t_patterns_round_trip(const LinearBlockCode& code) {
  for (std::uint64_t e = 0; e < (std::uint64_t{1} << code.n()); ++e) {
    if (static_cast<std::size_t>(std::popcount(e)) > code.t()) continue;
    const auto pattern = gf2::BitBlock::from_uint(e, code.n());
    if (code.decode_error_pattern(code.syndrome(pattern)) != pattern) return false;
  }
  return true;
}

}  // namespace

bool run_selftest(std::ostream& log) {
  Checker c(log);

  for (auto [n, k] : {std::pair<std::size_t, std::size_t>{15, 5}, {15, 7}, {15, 11}}) {
    const auto code = make_bch(n, k);
    const std::string tag = "BCH(" + std::to_string(n) + "," + std::to_string(k) + ")";
    c.check(gf2::mat_mul(code.generator(), code.parity_check().transpose()).is_zero(), tag + " G*H^T = 0");
    c.check(gf2::rank(code.generator()) == k && gf2::rank(code.parity_check()) == n - k, tag + " full rank");
    c.check(code.coset_leaders().size() == (std::size_t{1} << (n - k)), tag + " coset table covers every syndrome");
    c.check(weight_le_t_patterns_round_trip(code), tag + " weight <= t patterns decode to themselves");
  }

  for (std::size_t t : {1, 2, 3}) {
    const CorrelationModel model(15, t);
    RandomStream rng(7 + t);
    bool ok = true;
    for (int i = 0; i < 10'000; ++i) {
      const auto [c1, c2] = model.generate_pair(rng);
      ok = ok && gf2::hamming_distance(c1, c2) <= t;
    }
    c.check(ok, "correlated pairs respect d_H <= " + std::to_string(t));
  }

  bool ordered = true;
  bool in_range = true;
  for (double db = 0.0; db <= 14.0; db += 1.0) {
    const auto params = phy::ChannelParams::from_snr_db(db);
    const double s = analytics::bler_scpnc_exact(params, 15, 5);
    const double r = analytics::bler_rcpnc_exact(params, 15, 5);
    const double v = analytics::bler_conv_exact(params, 15);
    ordered = ordered && s <= r && r <= v;
    in_range = in_range && s >= 0.0 && v <= 1.0;
  }
  c.check(ordered, "exact BLER ordering SCPNC <= RCPNC <= conventional over 0..14 dB");
  c.check(in_range, "exact BLER within [0, 1] over 0..14 dB");

  SweepConfig config;
  config.scheme = SchemeKind::SCPNC;
  config.snr_db_grid = {6.0};
  config.min_trials = config.max_trials = 20'000;
  config.master_seed = 2024;
  const auto point = run_sweep(config).front();
  const double sigma = std::sqrt(point.bler_exact * (1.0 - point.bler_exact) / static_cast<double>(point.trials));
  c.check(std::abs(point.bler_sim - point.bler_exact) <= 4.0 * sigma, "SCPNC (15,5) at 6 dB: simulation matches closed form");

  config.snr_db_grid = {40.0};
  config.min_trials = config.max_trials = 2'000;
  c.check(run_sweep(config).front().throughput == 1.5, "SCPNC (15,5) throughput ceiling 1.5 blocks/TS at 40 dB");

  return c.all_ok();
}

}  // namespace twrelay::simkit
