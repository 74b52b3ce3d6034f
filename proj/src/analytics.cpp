#include "twrelay/analytics.hpp"

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace twrelay::analytics {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Beyond this argument erfc drifts toward the subnormal range; switch to the
// asymptotic expansion of the Mills ratio.
constexpr double kAsymptoticCutover = 30.0;

// ln Q(x) for x >= kAsymptoticCutover:
// Q(x) = phi(x)/x * sum_j (-1)^j (2j-1)!! / x^{2j}.
double log_q_tail(double x) {
  const double inv_x2 = 1.0 / (x * x);
  double term = 1.0;
  double sum = 1.0;
  for (int j = 1; j < 60; ++j) {
    term *= -(2.0 * j - 1.0) * inv_x2;
    sum += term;
    if (std::abs(term) < 1e-18) break;
  }
  return -0.5 * x * x - std::log(x) - 0.5 * std::log(2.0 * std::numbers::pi) + std::log(sum);
}

void require_code_dims(std::size_t n, std::size_t k) {
  if (!(k > 0 && k < n)) {
    throw std::invalid_argument("analytics: need 0 < k < n, got (" + std::to_string(n) + "," + std::to_string(k) + ")");
  }
}

struct SymbolTerm {
  double count;
  double log_p;
};

// ln(1 - prod_i (1 - p_i)^{N_i}).
double log_one_minus_survival(std::initializer_list<SymbolTerm> terms) {
  double max_log_p = -kInf;
  for (const auto& t : terms) max_log_p = std::max(max_log_p, t.log_p);
  if (max_log_p == -kInf) return -kInf;

  if (max_log_p > -600.0) {
    double log_survival = 0.0;
    for (const auto& t : terms) log_survival += t.count * std::log1p(-std::exp(t.log_p));
    return std::log(-std::expm1(log_survival));
  }
  // Every p is below 1e-260: 1 - prod(1 - p)^N = sum N p to full double precision.
  double acc = 0.0;
  for (const auto& t : terms) acc += t.count * std::exp(t.log_p - max_log_p);
  return max_log_p + std::log(acc);
}

}  // namespace

double q_function(double x) {
  if (std::isnan(x)) return x;
  if (x <= kAsymptoticCutover) return 0.5 * std::erfc(x / std::numbers::sqrt2);
  return std::exp(log_q_tail(x));
}

double log_q_function(double x) {
  if (std::isnan(x)) return x;
  if (x == kInf) return -kInf;
  if (x < 0.0) return std::log1p(-q_function(-x));
  if (x <= kAsymptoticCutover) return std::log(0.5 * std::erfc(x / std::numbers::sqrt2));
  return log_q_tail(x);
}

double pnc_delta(double gamma) {
  if (!(gamma > 0.0)) throw std::invalid_argument("pnc_delta: gamma must be positive");
  if (std::isinf(gamma)) return 0.0;
  const double log_term = std::log1p(std::sqrt(-std::expm1(-8.0 * gamma)));
  return std::numbers::sqrt2 / (4.0 * std::sqrt(gamma)) * log_term;
}

double log_p_pnc_exact(double gamma) {
  const double delta = pnc_delta(gamma);
  if (std::isinf(gamma)) return -kInf;
  const double a = std::sqrt(2.0 * gamma);
  // Q(a - delta) dominates; factor it out so the sum survives underflow.
  const double lead = log_q_function(a - delta);
  const double ratio_plus = std::exp(log_q_function(a + delta) - lead);
  const double ratio_far = std::exp(log_q_function(3.0 * a + delta) - lead);
  return lead + std::log(ratio_plus + 0.5 - 0.5 * ratio_far);
}

double p_pnc_exact(const phy::ChannelParams& params) { return std::exp(log_p_pnc_exact(params.gamma())); }

double p_pnc_high_snr(const phy::ChannelParams& params) {
  return 1.5 * q_function(std::sqrt(2.0 * params.gamma()));
}

double p_bpsk(const phy::ChannelParams& params) { return q_function(std::sqrt(2.0 * params.gamma())); }

double log_bler_exact(SchemeKind kind, double gamma, std::size_t n, std::size_t k) {
  if (kind != SchemeKind::Conventional) require_code_dims(n, k);
  if (!(gamma > 0.0)) throw std::invalid_argument("log_bler_exact: gamma must be positive");
  const auto budget = symbol_budget(kind, n, k);
  const double log_pnc = log_p_pnc_exact(gamma);
  const double log_bpsk = log_q_function(std::sqrt(2.0 * gamma));
  return log_one_minus_survival({{static_cast<double>(budget.uplink), log_pnc},
                                 {static_cast<double>(budget.downlink), log_bpsk}});
}

double asymptotic_coefficient(SchemeKind kind, std::size_t n, std::size_t k) {
  const double nn = static_cast<double>(n);
  const double kk = static_cast<double>(k);
  switch (kind) {
    case SchemeKind::SCPNC: return 5.0 * (nn - kk) / 2.0;
    case SchemeKind::RCPNC: return (5.0 * nn - 2.0 * kk) / 2.0;
    case SchemeKind::Conventional: return 5.0 * nn / 2.0;
  }
  throw std::invalid_argument("asymptotic_coefficient: unknown scheme");
}

double log_bler_asymptotic(SchemeKind kind, double gamma, std::size_t n, std::size_t k) {
  if (kind != SchemeKind::Conventional) require_code_dims(n, k);
  if (!(gamma > 0.0)) throw std::invalid_argument("log_bler_asymptotic: gamma must be positive");
  return std::log(asymptotic_coefficient(kind, n, k)) + log_q_function(std::sqrt(2.0 * gamma));
}

double bler_exact(SchemeKind kind, const phy::ChannelParams& params, std::size_t n, std::size_t k) {
  return std::exp(log_bler_exact(kind, params.gamma(), n, k));
}

double bler_asymptotic(SchemeKind kind, const phy::ChannelParams& params, std::size_t n, std::size_t k) {
  return std::exp(log_bler_asymptotic(kind, params.gamma(), n, k));
}

double bler_scpnc_exact(const phy::ChannelParams& params, std::size_t n, std::size_t k) {
  return bler_exact(SchemeKind::SCPNC, params, n, k);
}
double bler_scpnc_asym(const phy::ChannelParams& params, std::size_t n, std::size_t k) {
  return bler_asymptotic(SchemeKind::SCPNC, params, n, k);
}
double bler_rcpnc_exact(const phy::ChannelParams& params, std::size_t n, std::size_t k) {
  return bler_exact(SchemeKind::RCPNC, params, n, k);
}
double bler_rcpnc_asym(const phy::ChannelParams& params, std::size_t n, std::size_t k) {
  return bler_asymptotic(SchemeKind::RCPNC, params, n, k);
}
double bler_conv_exact(const phy::ChannelParams& params, std::size_t n) {
  return bler_exact(SchemeKind::Conventional, params, n, 0);
}
double bler_conv_asym(const phy::ChannelParams& params, std::size_t n) {
  return bler_asymptotic(SchemeKind::Conventional, params, n, 0);
}

BlerPrediction predict(SchemeKind kind, const phy::ChannelParams& params, std::size_t n, std::size_t k) {
  return {kind, params.gamma(), bler_exact(kind, params, n, k), bler_asymptotic(kind, params, n, k)};
}

double gain_scpnc(std::size_t n, std::size_t k) {
  require_code_dims(n, k);
  return static_cast<double>(n) / static_cast<double>(n - k);
}

double gain_rcpnc(std::size_t n, std::size_t k) {
  require_code_dims(n, k);
  return 5.0 * static_cast<double>(n) / (5.0 * static_cast<double>(n) - 2.0 * static_cast<double>(k));
}

double exact_bler_ratio(SchemeKind numerator, SchemeKind denominator, const phy::ChannelParams& params, std::size_t n,
                        std::size_t k) {
  return std::exp(log_bler_exact(numerator, params.gamma(), n, k) - log_bler_exact(denominator, params.gamma(), n, k));
}

}  // namespace twrelay::analytics
