#pragma once

#include <cstddef>

#include "twrelay/phy.hpp"
#include "twrelay/schemes.hpp"

namespace twrelay::analytics {

// Every probability here also has a natural-log form. Above roughly 27 dB
// the block error rates fall below the smallest double, so ratios between
// schemes must be taken in the log domain.

/// Gaussian tail Q(x) = P(N(0,1) > x).
double q_function(double x);
/// ln Q(x), finite for every finite x.
double log_q_function(double x);

/// Threshold offset in noise-sigma units: sqrt(2)/(4 sqrt(gamma)) ln(1 + sqrt(1 - e^{-8 gamma})).
double pnc_delta(double gamma);

/// Per-symbol PNC mapping error for equiprobable independent bits:
/// Q(a + d) + Q(a - d)/2 - Q(3a + d)/2 with a = sqrt(2 gamma), d = pnc_delta.
double p_pnc_exact(const phy::ChannelParams& params);
double log_p_pnc_exact(double gamma);
/// High-SNR form (3/2) Q(sqrt(2 gamma)).
double p_pnc_high_snr(const phy::ChannelParams& params);

/// BPSK symbol error Q(sqrt(2 gamma)).
double p_bpsk(const phy::ChannelParams& params);

/// Two-hop block error: 1 - (1 - P_PNC)^u (1 - P_BPSK)^d, with (u, d) the
/// scheme's uplink/downlink symbol budget for an (n, k) code.
double bler_exact(SchemeKind kind, const phy::ChannelParams& params, std::size_t n, std::size_t k);
double log_bler_exact(SchemeKind kind, double gamma, std::size_t n, std::size_t k);
/// c Q(sqrt(2 gamma)) with c = 5(n-k)/2, (5n-2k)/2 and 5n/2 respectively. May exceed 1 at low SNR.
double bler_asymptotic(SchemeKind kind, const phy::ChannelParams& params, std::size_t n, std::size_t k);
double log_bler_asymptotic(SchemeKind kind, double gamma, std::size_t n, std::size_t k);
double asymptotic_coefficient(SchemeKind kind, std::size_t n, std::size_t k);

double bler_scpnc_exact(const phy::ChannelParams& params, std::size_t n, std::size_t k);
double bler_scpnc_asym(const phy::ChannelParams& params, std::size_t n, std::size_t k);
double bler_rcpnc_exact(const phy::ChannelParams& params, std::size_t n, std::size_t k);
double bler_rcpnc_asym(const phy::ChannelParams& params, std::size_t n, std::size_t k);
double bler_conv_exact(const phy::ChannelParams& params, std::size_t n);
double bler_conv_asym(const phy::ChannelParams& params, std::size_t n);

struct BlerPrediction {
  SchemeKind scheme;
  double gamma;
  double exact;
  double asymptotic;
};

BlerPrediction predict(SchemeKind kind, const phy::ChannelParams& params, std::size_t n, std::size_t k);

/// High-SNR BLER ratios of the conventional scheme over SCPNC and RCPNC.
double gain_scpnc(std::size_t n, std::size_t k);
double gain_rcpnc(std::size_t n, std::size_t k);

/// exact BLER(numerator) / exact BLER(denominator), evaluated in the log domain.
double exact_bler_ratio(SchemeKind numerator, SchemeKind denominator, const phy::ChannelParams& params, std::size_t n,
                        std::size_t k);

}  // namespace twrelay::analytics
