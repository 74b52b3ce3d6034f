#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "twrelay/block_code.hpp"
#include "twrelay/gf2.hpp"
#include "twrelay/phy.hpp"
#include "twrelay/random.hpp"
#include "twrelay/sources.hpp"

namespace twrelay {

/// SCPNC compresses at both sources, RCPNC compresses at the relay,
/// Conventional relays the raw blocks with PNC and no compression.
enum class SchemeKind { SCPNC, RCPNC, Conventional };

std::string to_string(SchemeKind kind);
/// Case-insensitive; accepts "scpnc", "rcpnc", "conventional" / "conv".
std::optional<SchemeKind> parse_scheme(std::string_view text);

/// Result of one bidirectional exchange.
struct TrialOutcome {
  bool ok_1to2 = false;  // T2 recovered c1 exactly
  bool ok_2to1 = false;  // T1 recovered c2 exactly
  std::size_t uplink_symbols = 0;
  std::size_t downlink_symbols = 0;

  int successes() const noexcept { return int{ok_1to2} + int{ok_2to1}; }
  std::size_t total_symbols() const noexcept { return uplink_symbols + downlink_symbols; }
};

/// Uplink/downlink symbol counts per exchange for a scheme and an (n, k) code.
struct SymbolBudget {
  std::size_t uplink;
  std::size_t downlink;
};
SymbolBudget symbol_budget(SchemeKind kind, std::size_t n, std::size_t k);

/// Slepian-Wolf decoding with side information: the received XOR syndrome
/// is mapped to its coset leader and added to the receiver's own block.
gf2::BitBlock sw_decode(const LinearBlockCode& code, const gf2::BitBlock& received_syndrome,
                        const gf2::BitBlock& side_information);

/// Sources send syndromes over m symbols; relay forwards the PNC estimate of
/// s1 xor s2; each destination demodulates independently and SW-decodes.
TrialOutcome run_scpnc(const LinearBlockCode& code, const phy::ChannelParams& params, const MessagePair& pair,
                       RandomStream& rng);

/// Sources send raw blocks over n symbols; relay maps to c1 xor c2, compresses
/// the estimate to its syndrome and broadcasts m symbols.
TrialOutcome run_rcpnc(const LinearBlockCode& code, const phy::ChannelParams& params, const MessagePair& pair,
                       RandomStream& rng);

/// Two-slot PNC exchange of raw n-bit blocks.
TrialOutcome run_conventional(const phy::ChannelParams& params, const MessagePair& pair, RandomStream& rng);

TrialOutcome run_trial(SchemeKind kind, const LinearBlockCode& code, const phy::ChannelParams& params,
                       const MessagePair& pair, RandomStream& rng);

}  // namespace twrelay
