#pragma once

// Test-only reference computations. Nothing here calls into the library's
// analytics, so comparisons against it are independent checks.

#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace oracle {

inline double integrate(auto f, double a, double b) {
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, a, b, 15, 1e-14);
}

/// Q(x) by adaptive quadrature of the standard normal density.
inline double q_by_quadrature(double x) {
  const double inv_sqrt_2pi = 1.0 / std::sqrt(2.0 * std::numbers::pi);
  auto phi = [&](double t) { return inv_sqrt_2pi * std::exp(-0.5 * t * t); };
  if (x >= 0.0) return integrate(phi, x, std::numeric_limits<double>::infinity());
  return 1.0 - integrate(phi, -x, std::numeric_limits<double>::infinity());
}

/// ln Q(x) for x >= 0 via Q(x) = phi(x) * int_0^inf exp(-x u - u^2/2) du.
inline double log_q_by_quadrature(double x) {
  auto g = [&](double u) { return std::exp(-x * u - 0.5 * u * u); };
  const double scaled = integrate(g, 0.0, std::numeric_limits<double>::infinity());
  return -0.5 * x * x - 0.5 * std::log(2.0 * std::numbers::pi) + std::log(scaled);
}

/// Per-symbol PNC error as the sum of four Gaussian integrals over the
/// received amplitude t, noise density exp(-t^2/N0)/sqrt(pi N0), with E = 1.
inline double pnc_error_by_quadrature(double gamma, double threshold) {
  const double n0 = 1.0 / gamma;
  const double amp = 1.0;  // sqrt(E)
  const double norm = 1.0 / std::sqrt(std::numbers::pi * n0);
  const double inf = std::numeric_limits<double>::infinity();
  auto centered = [&](double mean) { return [=](double t) { return norm * std::exp(-(t - mean) * (t - mean) / n0); }; };
  const double tail_low = integrate(centered(0.0), -inf, -threshold);
  const double tail_high = integrate(centered(0.0), threshold, inf);
  const double inner_neg = integrate(centered(-2.0 * amp), -threshold, threshold);
  const double inner_pos = integrate(centered(2.0 * amp), -threshold, threshold);
  return 0.5 * tail_low + 0.5 * tail_high + 0.25 * inner_neg + 0.25 * inner_pos;
}

/// Decision boundary y > 0 where P(XOR=1) f(y) = P(XOR=0) [f(y-2a) + f(y+2a)] / 2
/// with equiprobable bits, found by bisection on the log-likelihood ratio.
inline double pnc_threshold_by_bisection(double energy, double n0) {
  const double a = std::sqrt(energy);
  auto llr = [&](double y) {
    // ln[(f(y-2a) + f(y+2a)) / (2 f(y))], numerically stable form.
    const double u = -(y - 2 * a) * (y - 2 * a) / n0 + y * y / n0;
    const double v = -(y + 2 * a) * (y + 2 * a) / n0 + y * y / n0;
    const double hi = std::max(u, v);
    return hi + std::log(std::exp(u - hi) + std::exp(v - hi)) - std::log(2.0);
  };
  double lo = 0.0;
  double hi = 2.0 * a + 50.0 * std::sqrt(n0);
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (llr(mid) < 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

/// Polynomial-product codewords m(x) g(x); independent of any matrix form.
inline std::vector<std::uint64_t> cyclic_codewords(std::uint64_t generator, unsigned k) {
  std::vector<std::uint64_t> words;
  for (std::uint64_t msg = 0; msg < (std::uint64_t{1} << k); ++msg) {
    std::uint64_t w = 0;
    for (unsigned i = 0; i < k; ++i) {
      if ((msg >> i) & 1u) w ^= generator << i;
    }
    words.push_back(w);
  }
  return words;
}

/// |observed - expected| in binomial standard errors of the expected proportion.
inline double binomial_z(double observed, double expected, double trials) {
  return std::abs(observed - expected) / std::sqrt(expected * (1.0 - expected) / trials);
}

}  // namespace oracle
