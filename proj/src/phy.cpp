#include "twrelay/phy.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace twrelay::phy {

ChannelParams::ChannelParams(double gamma, double energy) : gamma_(gamma), energy_(energy) {
  if (!(gamma > 0.0)) throw std::invalid_argument("ChannelParams: gamma must be positive, got " + std::to_string(gamma));
  if (!(energy > 0.0) || !std::isfinite(energy)) {
    throw std::invalid_argument("ChannelParams: energy must be positive and finite");
  }
}

ChannelParams ChannelParams::from_snr_db(double snr_db, double energy) {
  return ChannelParams(db_to_linear(snr_db), energy);
}

ChannelParams ChannelParams::noiseless(double energy) {
  return ChannelParams(std::numeric_limits<double>::infinity(), energy);
}

double ChannelParams::noise_sigma() const noexcept { return std::sqrt(n0() / 2.0); }

bool ChannelParams::is_noiseless() const noexcept { return std::isinf(gamma_); }

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

double linear_to_db(double gamma) { return 10.0 * std::log10(gamma); }

SymbolBlock bpsk_modulate(const gf2::BitBlock& bits, double energy) {
  const double amplitude = std::sqrt(energy);
  SymbolBlock out(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) out[i] = bits[i] ? -amplitude : amplitude;
  return out;
}

SymbolBlock awgn(std::span<const double> x, const ChannelParams& params, RandomStream& rng) {
  SymbolBlock out(x.begin(), x.end());
  if (params.is_noiseless()) return out;
  std::normal_distribution<double> noise(0.0, params.noise_sigma());
  for (auto& sample : out) sample += noise(rng);
  return out;
}

SymbolBlock multiple_access(std::span<const double> x1, std::span<const double> x2, const ChannelParams& params,
                            RandomStream& rng) {
  if (x1.size() != x2.size()) {
    throw std::invalid_argument("multiple_access: block lengths differ (" + std::to_string(x1.size()) + " vs " +
                                std::to_string(x2.size()) + ")");
  }
  const double amplitude = std::sqrt(params.energy());
  SymbolBlock superposed(x1.size());
  for (std::size_t i = 0; i < x1.size(); ++i) superposed[i] = amplitude * x1[i] + amplitude * x2[i];
  return awgn(superposed, params, rng);
}

double pnc_threshold(const ChannelParams& params) {
  const double gamma = params.gamma();
  // ln(1 + sqrt(1 - e^{-8 gamma})); expm1/log1p keep it accurate as gamma -> 0,
  // and it saturates at ln 2 once e^{-8 gamma} underflows.
  const double log_term = std::log1p(std::sqrt(-std::expm1(-8.0 * gamma)));
  if (params.is_noiseless()) return std::sqrt(params.energy());
  return std::sqrt(params.energy()) + std::sqrt(params.n0()) / (4.0 * std::sqrt(gamma)) * log_term;
}

gf2::BitBlock pnc_map(std::span<const double> y, const ChannelParams& params) {
  const double threshold = pnc_threshold(params);
  gf2::BitBlock out(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (!(std::abs(y[i]) > threshold)) out.set(i, 1);
  }
  return out;
}

gf2::BitBlock bpsk_demodulate(std::span<const double> y) {
  gf2::BitBlock out(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (!(y[i] > 0.0)) out.set(i, 1);
  }
  return out;
}

}  // namespace twrelay::phy
