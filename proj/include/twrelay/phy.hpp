#pragma once

#include <span>
#include <vector>

#include "twrelay/gf2.hpp"
#include "twrelay/random.hpp"

namespace twrelay::phy {

/// Equal-power AWGN link parameters. gamma = E / N0; the noise spectral
/// density is derived, never stored. gamma = +inf is the noiseless channel.
class ChannelParams {
 public:
  explicit ChannelParams(double gamma, double energy = 1.0);

  static ChannelParams from_snr_db(double snr_db, double energy = 1.0);
  static ChannelParams noiseless(double energy = 1.0);

  double gamma() const noexcept { return gamma_; }
  double energy() const noexcept { return energy_; }
  double n0() const noexcept { return energy_ / gamma_; }
  /// Per-dimension noise standard deviation, sqrt(N0 / 2).
  double noise_sigma() const noexcept;
  bool is_noiseless() const noexcept;

 private:
  double gamma_;
  double energy_;
};

double db_to_linear(double db);
double linear_to_db(double gamma);

using SymbolBlock = std::vector<double>;

/// sample[i] = sqrt(E) * (1 - 2 bits[i]).
SymbolBlock bpsk_modulate(const gf2::BitBlock& bits, double energy = 1.0);

/// Adds independent real Gaussian noise of variance N0 / 2 to each sample.
SymbolBlock awgn(std::span<const double> x, const ChannelParams& params, RandomStream& rng);

/// Uplink superposition y = sqrt(E) x1 + sqrt(E) x2 + n for unit-amplitude inputs.
SymbolBlock multiple_access(std::span<const double> x1, std::span<const double> x2, const ChannelParams& params,
                            RandomStream& rng);

/// Optimal magnitude threshold separating the XOR-0 (|y| ~ 2 sqrt(E)) and
/// XOR-1 (y ~ 0) hypotheses for equiprobable bits, in received-amplitude units.
double pnc_threshold(const ChannelParams& params);

/// bit[i] = 0 if |y[i]| > threshold, else 1. Estimates the XOR of the two uplink bits.
gf2::BitBlock pnc_map(std::span<const double> y, const ChannelParams& params);

/// bit[i] = 0 if y[i] > 0, else 1.
gf2::BitBlock bpsk_demodulate(std::span<const double> y);

}  // namespace twrelay::phy
