// Acceptance checks: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "../oracles.hpp"
#include "twrelay/analytics.hpp"
#include "twrelay/block_code.hpp"
#include "twrelay/phy.hpp"
#include "twrelay/random.hpp"
#include "twrelay/simkit.hpp"
#include "twrelay/sources.hpp"

using namespace twrelay;
namespace an = twrelay::analytics;
using phy::ChannelParams;

namespace {

// Pinned tolerances.
constexpr double kQuadratureRelTol = 1e-8;
constexpr double kSigmaBound = 3.0;
constexpr std::uint64_t kPncSymbols = 10'000'000;
constexpr std::uint64_t kBlerTrials = 1'000'000;
constexpr double kAsymLow = 0.9;
constexpr double kAsymHigh = 1.1;
constexpr double kGainRelTol = 0.02;
constexpr double kCeilingRelTol = 1e-3;
constexpr std::uint64_t kCeilingTrials = 100'000;
constexpr std::uint64_t kOrderingTrials = 100'000;
constexpr std::uint64_t kPairsPerT = 1'000'000;
constexpr double kRhoTol = 5e-5;  // factors are quoted to two decimals of a percent

std::size_t workers() { return std::max(1u, std::thread::hardware_concurrency()); }

struct Report {
  bool all_ok = true;
  void line(int id, bool ok, const std::string& what) {
    std::cout << "criterion " << id << ": " << (ok ? "PASS" : "FAIL") << "  " << what << std::endl;
    all_ok = all_ok && ok;
  }
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

bool c1_quadrature(std::string& detail) {
  bool ok = true;
  double worst = 0.0;
  for (double gamma : {0.5, 1.0, 2.0, 5.0, 10.0, 50.0}) {
    const ChannelParams params(gamma);
    const double want = oracle::pnc_error_by_quadrature(gamma, phy::pnc_threshold(params));
    const double err = std::abs(an::p_pnc_exact(params) - want) / want;
    worst = std::max(worst, err);
    ok = ok && err <= kQuadratureRelTol;
  }
  detail = fmt("max relative error %.2e (bound %.0e)", worst, kQuadratureRelTol);
  return ok;
}

// Per-symbol PNC error through the actual modulate / superpose / map chain.
double simulate_pnc_symbol_error(double snr_db, std::uint64_t symbols, std::uint64_t seed) {
  const auto params = ChannelParams::from_snr_db(snr_db);
  constexpr std::size_t kBlock = 4096;
  std::uint64_t errors = 0;
  std::uint64_t done = 0;
  std::uint64_t batch = 0;
  while (done < symbols) {
    const std::size_t len = static_cast<std::size_t>(std::min<std::uint64_t>(kBlock, symbols - done));
    auto rng = derive_stream(seed, static_cast<std::uint64_t>(snr_db * 100), batch++);
    gf2::BitBlock b1(len), b2(len);
    for (std::size_t i = 0; i < len; ++i) {
      const auto r = rng();
      b1.set(i, r & 1u);
      b2.set(i, (r >> 1) & 1u);
    }
    const auto y = phy::multiple_access(phy::bpsk_modulate(b1), phy::bpsk_modulate(b2), params, rng);
    const auto est = phy::pnc_map(y, params);
    errors += gf2::hamming_weight(est ^ (b1 ^ b2));
    done += len;
  }
  return static_cast<double>(errors) / static_cast<double>(symbols);
}

bool c2_pnc_simulation(std::string& detail) {
  bool ok = true;
  std::string parts;
  for (double db : {5.0, 7.0, 9.0}) {
    const double sim = simulate_pnc_symbol_error(db, kPncSymbols, 11);
    const double exact = an::p_pnc_exact(ChannelParams::from_snr_db(db));
    const double z = oracle::binomial_z(sim, exact, static_cast<double>(kPncSymbols));
    ok = ok && z <= kSigmaBound;
    parts += fmt(" %gdB z=%.2f", db, z);
  }
  detail = "1e7 symbols per point," + parts;
  return ok;
}

bool c3_scpnc_bler(std::string& detail) {
  simkit::SweepConfig c;
  c.scheme = SchemeKind::SCPNC;
  c.n = 15;
  c.k = 5;
  c.snr_db_grid = {4.0, 6.0, 8.0, 10.0};
  c.min_trials = c.max_trials = kBlerTrials;
  c.master_seed = 20240;
  const auto pts = simkit::run_sweep(c, {.workers = workers()});
  bool ok = true;
  std::string parts;
  for (const auto& p : pts) {
    const double z = oracle::binomial_z(p.bler_sim, p.bler_exact, static_cast<double>(p.trials));
    ok = ok && z <= kSigmaBound;
    // Diagnostic: per-bit relay-to-terminal error with the two-hop flips cancelling.
    const auto params = ChannelParams::from_snr_db(p.snr_db);
    const double pu = an::p_pnc_exact(params);
    const double pd = an::p_bpsk(params);
    const double cancel = 1.0 - std::pow(1.0 - pu - pd + 2.0 * pu * pd, 10.0);
    const double z_cancel = oracle::binomial_z(p.bler_sim, cancel, static_cast<double>(p.trials));
    parts += fmt(" %gdB sim=%.5g closed=%.5g z=%.2f (two-hop-cancel form z=%.2f);", p.snr_db, p.bler_sim,
                 p.bler_exact, z, z_cancel);
  }
  detail = "(15,5), 1e6 trials per point:" + parts;
  return ok;
}

bool c4_asymptotic(std::string& detail) {
  bool ok = true;
  double lo = 1e9, hi = 0.0;
  for (auto kind : {SchemeKind::SCPNC, SchemeKind::RCPNC, SchemeKind::Conventional}) {
    for (std::size_t k : {5, 7, 11}) {
      for (double db = 12.0; db <= 40.0; db += 0.5) {
        const double g = phy::db_to_linear(db);
        const double r = std::exp(an::log_bler_asymptotic(kind, g, 15, k) - an::log_bler_exact(kind, g, 15, k));
        lo = std::min(lo, r);
        hi = std::max(hi, r);
        ok = ok && r >= kAsymLow && r <= kAsymHigh;
      }
    }
  }
  detail = fmt("ratio range [%.4f, %.4f] over 12..40 dB, all schemes and codes", lo, hi);
  return ok;
}

bool c5_gains(std::string& detail) {
  const auto params = ChannelParams::from_snr_db(30.0);
  const double s = an::exact_bler_ratio(SchemeKind::Conventional, SchemeKind::SCPNC, params, 15, 5);
  const double r = an::exact_bler_ratio(SchemeKind::Conventional, SchemeKind::RCPNC, params, 15, 5);
  const double es = std::abs(s / 1.5 - 1.0);
  const double er = std::abs(r / (75.0 / 65.0) - 1.0);
  detail = fmt("conv/SCPNC=%.5f (off %.2f%%), conv/RCPNC=%.5f vs 75/65 (off %.2f%%)", s, 100 * es, r, 100 * er);
  return es <= kGainRelTol && er <= kGainRelTol;
}

std::size_t dmin_by_enumeration(const LinearBlockCode& code) {
  std::size_t best = code.n();
  for (std::uint64_t msg = 1; msg < (std::uint64_t{1} << code.k()); ++msg) {
    best = std::min(best, gf2::hamming_weight(code.encode(gf2::BitBlock::from_uint(msg, code.k()))));
  }
  return best;
}

bool c6_coding(std::string& detail) {
  bool ok = true;
  std::string parts;
  const std::pair<std::size_t, std::size_t> want_dmin[] = {{5, 7}, {7, 5}, {11, 3}};
  for (auto [k, dmin_want] : want_dmin) {
    const auto code = make_bch(15, k);
    std::size_t cases = 0;
    bool round_trip = true;
    for (std::uint64_t e = 0; e < (std::uint64_t{1} << 15); ++e) {
      if (static_cast<std::size_t>(std::popcount(e)) > code.t()) continue;
      ++cases;
      const auto pat = gf2::BitBlock::from_uint(e, 15);
      round_trip = round_trip && code.decode_error_pattern(code.syndrome(pat)) == pat;
    }
    const bool orth = gf2::mat_mul(code.generator(), code.parity_check().transpose()).is_zero();
    const std::size_t dmin = dmin_by_enumeration(code);
    const bool dmin_ok = k == 7 ? dmin >= dmin_want : dmin == dmin_want;
    // Every syndrome is hit by its own leader.
    bool covers = code.coset_leaders().size() == (std::size_t{1} << code.m());
    for (std::uint64_t s = 0; covers && s < code.coset_leaders().size(); ++s) {
      covers = code.syndrome(code.coset_leaders()[s]) == gf2::BitBlock::from_uint(s, code.m());
    }
    ok = ok && round_trip && orth && dmin_ok && covers;
    parts += fmt(" (15,%zu): %zu patterns, dmin=%zu;", k, cases, dmin);
  }
  detail = parts;
  return ok;
}

bool c7_throughput(std::string& detail) {
  bool ok = true;
  std::string parts;
  simkit::SweepConfig c;
  c.snr_db_grid = {40.0};
  c.min_trials = c.max_trials = kCeilingTrials;
  const std::pair<SchemeKind, double> ceilings[] = {
      {SchemeKind::SCPNC, 1.5}, {SchemeKind::RCPNC, 1.2}, {SchemeKind::Conventional, 1.0}};
  for (auto [kind, want] : ceilings) {
    c.scheme = kind;
    const double got = simkit::run_sweep(c, {.workers = workers()}).front().throughput;
    ok = ok && std::abs(got / want - 1.0) < kCeilingRelTol;
    parts += fmt(" %s=%.5f", to_string(kind).c_str(), got);
  }

  c.snr_db_grid = {4.0, 6.0, 8.0, 10.0, 12.0, 14.0};
  c.min_trials = c.max_trials = kOrderingTrials;
  std::vector<std::vector<simkit::SweepPoint>> curves;
  for (auto [kind, want] : ceilings) {
    c.scheme = kind;
    curves.push_back(simkit::run_sweep(c, {.workers = workers()}));
  }
  bool ordered = true;
  for (std::size_t i = 0; i < c.snr_db_grid.size(); ++i) {
    ordered = ordered && curves[0][i].throughput_ci_low > curves[1][i].throughput_ci_high &&
              curves[1][i].throughput_ci_low > curves[2][i].throughput_ci_high;
  }
  detail = "40 dB:" + parts + (ordered ? "; CIs strictly ordered at 4..14 dB" : "; ordering violated");
  return ok && ordered;
}

bool c8_correlation(std::string& detail) {
  bool ok = true;
  std::string parts;
  const std::pair<std::size_t, double> rho[] = {{3, 0.60}, {2, 0.7333}, {1, 0.8667}};
  for (auto [t, want] : rho) {
    const CorrelationModel model(15, t);
    std::uint64_t violations = 0;
    for (std::uint64_t batch = 0; batch < kPairsPerT / 1000; ++batch) {
      auto rng = derive_stream(77, t, batch);
      for (int i = 0; i < 1000; ++i) {
        const auto [a, b] = model.generate_pair(rng);
        violations += gf2::hamming_distance(a, b) > t;
      }
    }
    const double got = model.correlation_factor();
    ok = ok && violations == 0 && std::abs(got - want) <= kRhoTol;
    parts += fmt(" t=%zu: %llu violations, rho=%.4f;", t, static_cast<unsigned long long>(violations), got);
  }
  detail = parts;
  return ok;
}

bool c9_determinism(std::string& detail) {
  simkit::SweepConfig c;
  c.scheme = SchemeKind::RCPNC;
  c.k = 7;
  c.snr_db_grid = {0.0, 3.0, 6.0, 9.0};
  c.min_trials = 10'000;
  c.max_trials = 200'000;
  c.master_seed = 4242;
  std::ostringstream a, b;
  simkit::write_csv(a, simkit::run_sweep(c, {.workers = 1}));
  simkit::write_csv(b, simkit::run_sweep(c, {.workers = std::max<std::size_t>(3, workers())}));
  detail = fmt("%zu bytes, workers 1 vs %zu", a.str().size(), std::max<std::size_t>(3, workers()));
  return a.str() == b.str();
}

}  // namespace

int main() {
  Report report;
  const std::pair<int, std::function<bool(std::string&)>> criteria[] = {
      {1, c1_quadrature}, {2, c2_pnc_simulation}, {3, c3_scpnc_bler}, {4, c4_asymptotic}, {5, c5_gains},
      {6, c6_coding},     {7, c7_throughput},     {8, c8_correlation}, {9, c9_determinism}};
  for (const auto& [id, run] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = false;
    try {
      ok = run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report.line(id, ok, detail + fmt(" [%.1fs]", secs));
  }
  return report.all_ok ? 0 : 1;
}
