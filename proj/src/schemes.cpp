#include "twrelay/schemes.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace twrelay {

using gf2::BitBlock;

namespace {

void require_correlated(const LinearBlockCode& code, const MessagePair& pair) {
  if (pair.first.size() != code.n() || pair.second.size() != code.n()) {
    throw std::invalid_argument("message length does not match code length n = " + std::to_string(code.n()));
  }
  const auto d = gf2::hamming_distance(pair.first, pair.second);
  if (d > code.t()) {
    throw std::invalid_argument("message pair violates the correlation constraint: distance " + std::to_string(d) +
                                " > t = " + std::to_string(code.t()));
  }
}

// Relay broadcast; each destination sees its own noise realization.
struct Broadcast {
  BitBlock at_t1;
  BitBlock at_t2;
};

Broadcast broadcast(const BitBlock& relay_bits, const phy::ChannelParams& params, RandomStream& rng) {
  const auto x = phy::bpsk_modulate(relay_bits, params.energy());
  Broadcast out;
  out.at_t1 = phy::bpsk_demodulate(phy::awgn(x, params, rng));
  out.at_t2 = phy::bpsk_demodulate(phy::awgn(x, params, rng));
  return out;
}

BitBlock pnc_uplink(const BitBlock& b1, const BitBlock& b2, const phy::ChannelParams& params, RandomStream& rng) {
  const auto x1 = phy::bpsk_modulate(b1);
  const auto x2 = phy::bpsk_modulate(b2);
  return phy::pnc_map(phy::multiple_access(x1, x2, params, rng), params);
}

}  // namespace

std::string to_string(SchemeKind kind) {
  switch (kind) {
    case SchemeKind::SCPNC: return "SCPNC";
    case SchemeKind::RCPNC: return "RCPNC";
    case SchemeKind::Conventional: return "Conventional";
  }
  return "unknown";
}

std::optional<SchemeKind> parse_scheme(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
  if (lower == "scpnc") return SchemeKind::SCPNC;
  if (lower == "rcpnc") return SchemeKind::RCPNC;
  if (lower == "conventional" || lower == "conv") return SchemeKind::Conventional;
  return std::nullopt;
}

SymbolBudget symbol_budget(SchemeKind kind, std::size_t n, std::size_t k) {
  switch (kind) {
    case SchemeKind::SCPNC: return {n - k, n - k};
    case SchemeKind::RCPNC: return {n, n - k};
    case SchemeKind::Conventional: return {n, n};
  }
  throw std::invalid_argument("symbol_budget: unknown scheme");
}

BitBlock sw_decode(const LinearBlockCode& code, const BitBlock& received_syndrome, const BitBlock& side_information) {
  return code.decode_error_pattern(received_syndrome) ^ side_information;
}

TrialOutcome run_scpnc(const LinearBlockCode& code, const phy::ChannelParams& params, const MessagePair& pair,
                       RandomStream& rng) {
  require_correlated(code, pair);
  const auto& [c1, c2] = pair;

  const BitBlock relay_estimate = pnc_uplink(code.syndrome(c1), code.syndrome(c2), params, rng);
  const Broadcast rx = broadcast(relay_estimate, params, rng);

  TrialOutcome out;
  out.ok_1to2 = sw_decode(code, rx.at_t2, c2) == c1;
  out.ok_2to1 = sw_decode(code, rx.at_t1, c1) == c2;
  out.uplink_symbols = code.m();
  out.downlink_symbols = code.m();
  return out;
}

TrialOutcome run_rcpnc(const LinearBlockCode& code, const phy::ChannelParams& params, const MessagePair& pair,
                       RandomStream& rng) {
  require_correlated(code, pair);
  const auto& [c1, c2] = pair;

  const BitBlock relay_estimate = pnc_uplink(c1, c2, params, rng);
  const Broadcast rx = broadcast(code.syndrome(relay_estimate), params, rng);

  TrialOutcome out;
  out.ok_1to2 = sw_decode(code, rx.at_t2, c2) == c1;
  out.ok_2to1 = sw_decode(code, rx.at_t1, c1) == c2;
  out.uplink_symbols = code.n();
  out.downlink_symbols = code.m();
  return out;
}

TrialOutcome run_conventional(const phy::ChannelParams& params, const MessagePair& pair, RandomStream& rng) {
  const auto& [c1, c2] = pair;
  if (c1.size() != c2.size() || c1.empty()) throw std::invalid_argument("run_conventional: blocks must be non-empty and of equal length");

  const BitBlock relay_estimate = pnc_uplink(c1, c2, params, rng);
  const Broadcast rx = broadcast(relay_estimate, params, rng);

  TrialOutcome out;
  out.ok_1to2 = (rx.at_t2 ^ c2) == c1;
  out.ok_2to1 = (rx.at_t1 ^ c1) == c2;
  out.uplink_symbols = c1.size();
  out.downlink_symbols = c1.size();
  return out;
}

TrialOutcome run_trial(SchemeKind kind, const LinearBlockCode& code, const phy::ChannelParams& params,
                       const MessagePair& pair, RandomStream& rng) {
  switch (kind) {
    case SchemeKind::SCPNC: return run_scpnc(code, params, pair, rng);
    case SchemeKind::RCPNC: return run_rcpnc(code, params, pair, rng);
    case SchemeKind::Conventional: return run_conventional(params, pair, rng);
  }
  throw std::invalid_argument("run_trial: unknown scheme");
}

}  // namespace twrelay
